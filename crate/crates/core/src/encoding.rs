//! Prime-product encoding of indeterminate letters.
//!
//! The `j`-th alphabet character is assigned the `j`-th prime. A letter, i.e.
//! a nonempty subset of the alphabet, is encoded as the product of the primes
//! of its members. Two letters share a character exactly when their encodings
//! share a prime factor, so matching reduces to `gcd(u, v) > 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{gcd, Word};

/// Largest supported alphabet.
pub const MAX_SIGMA: usize = 9;

/// The first nine primes.
pub const PRIMES: [u32; MAX_SIGMA] = [2, 3, 5, 7, 11, 13, 17, 19, 23];

/// Product of all nine primes, the largest value any encoded letter can take.
pub const MAX_PRODUCT: u32 = 223_092_870;

/// `PRIME_TABLE[v]` is true iff `v` is prime, for `v` in `0..=23`.
const PRIME_TABLE: [bool; 24] = {
    let mut table = [false; 24];
    let mut k = 0;
    while k < MAX_SIGMA {
        table[PRIMES[k] as usize] = true;
        k += 1;
    }
    table
};

/// An ordered set of at most nine distinct base characters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    chars: Vec<char>,
    max_product: u32,
}

impl Alphabet {
    /// Builds an alphabet; primes are assigned in character order.
    pub fn new(chars: &str) -> Result<Self> {
        Self::from_chars(chars.chars())
    }

    pub fn from_chars<I: IntoIterator<Item = char>>(chars: I) -> Result<Self> {
        let mut out: Vec<char> = Vec::new();
        for c in chars {
            if c.is_whitespace() || c.is_control() || c == '[' || c == ']' {
                return Err(Error::InvalidCharacter(c));
            }
            if out.contains(&c) {
                return Err(Error::DuplicateCharacter(c));
            }
            out.push(c);
        }
        if out.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if out.len() > MAX_SIGMA {
            return Err(Error::AlphabetTooLarge(out.len()));
        }
        let max_product = PRIMES[..out.len()].iter().product();
        Ok(Alphabet {
            chars: out,
            max_product,
        })
    }

    /// The DNA alphabet `acgt` (primes 2, 3, 5, 7).
    pub fn dna() -> Self {
        Alphabet {
            chars: vec!['a', 'c', 'g', 't'],
            max_product: 210,
        }
    }

    /// The first `sigma` lowercase letters, `a..`.
    pub fn first_letters(sigma: usize) -> Result<Self> {
        if sigma > MAX_SIGMA {
            return Err(Error::AlphabetTooLarge(sigma));
        }
        Self::from_chars((b'a'..).take(sigma).map(char::from))
    }

    pub fn sigma(&self) -> usize {
        self.chars.len()
    }

    pub fn chars(&self) -> &[char] {
        &self.chars
    }

    pub fn primes(&self) -> &'static [u32] {
        &PRIMES[..self.chars.len()]
    }

    pub fn max_product(&self) -> u32 {
        self.max_product
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.chars.iter().position(|&x| x == c)
    }

    /// Fails if the largest letter of this alphabet does not fit `W`.
    pub fn check_word<W: Word>(&self) -> Result<()> {
        match W::narrow(u64::from(self.max_product)) {
            Some(_) => Ok(()),
            None => Err(Error::WordTooNarrow {
                max_product: self.max_product,
                bits: W::BITS,
            }),
        }
    }

    /// Encodes a character set as the product of its members' primes.
    /// Repeated characters are treated as one member.
    pub fn encode<W: Word>(
        &self,
        subset: impl IntoIterator<Item = char>,
    ) -> Result<EncodedLetter<W>> {
        let mut mask = 0u16;
        for c in subset {
            let idx = self.index_of(c).ok_or(Error::UnknownCharacter(c))?;
            mask |= 1 << idx;
        }
        self.encode_mask(mask)
    }

    /// Encodes the subset whose bit `j` selects character `j`.
    pub fn encode_mask<W: Word>(&self, mask: u16) -> Result<EncodedLetter<W>> {
        if mask == 0 {
            return Err(Error::EmptySet);
        }
        if mask >> self.sigma() != 0 {
            return Err(Error::NotInAlphabet(u64::from(mask)));
        }
        self.check_word::<W>()?;
        let product: u64 = self
            .primes()
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, &p)| u64::from(p))
            .product();
        // check_word bounds every product of this alphabet's primes.
        Ok(EncodedLetter(
            W::narrow(product).expect("product bounded by max_product"),
        ))
    }

    /// Bitmask of the characters in `v`; the inverse of [`Alphabet::encode_mask`].
    pub fn decode_mask<W: Word>(&self, v: W) -> Result<u16> {
        let raw = v.widen();
        if raw < 2 {
            return Err(Error::NotInAlphabet(raw));
        }
        let mut rest = raw;
        let mut mask = 0u16;
        for (j, &p) in self.primes().iter().enumerate() {
            let p = u64::from(p);
            if rest.is_multiple_of(p) {
                rest /= p;
                if rest.is_multiple_of(p) {
                    return Err(Error::NotInAlphabet(raw));
                }
                mask |= 1 << j;
            }
        }
        if rest != 1 {
            return Err(Error::NotInAlphabet(raw));
        }
        Ok(mask)
    }

    /// Characters of `v` in alphabet order.
    pub fn decode<W: Word>(&self, v: EncodedLetter<W>) -> Result<Vec<char>> {
        let mask = self.decode_mask(v.0)?;
        Ok(self
            .chars
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, &c)| c)
            .collect())
    }

    /// Validates a raw value against this alphabet.
    pub fn letter<W: Word>(&self, value: W) -> Result<EncodedLetter<W>> {
        self.decode_mask(value)?;
        Ok(EncodedLetter(value))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.chars.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

/// One encoded letter: a squarefree product of alphabet primes.
///
/// Ordering is integer ordering of the encodings, which is the order the
/// encoding induces on indeterminate letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct EncodedLetter<W>(W);

impl<W: Word> EncodedLetter<W> {
    #[inline]
    pub fn value(self) -> W {
        self.0
    }

    /// A letter is regular iff its encoding is prime.
    #[inline]
    pub fn is_regular(self) -> bool {
        !is_indet(self.0)
    }

    #[inline]
    pub fn is_indet(self) -> bool {
        is_indet(self.0)
    }

    #[inline]
    pub fn matches(self, other: Self) -> bool {
        letters_match(self.0, other.0)
    }

    /// True iff every character of `self` also belongs to `other`.
    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        other.0 % self.0 == W::zero()
    }
}

impl<W: Word> fmt::Display for EncodedLetter<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `u ≈ v`: the letters share at least one character.
#[inline]
pub fn letters_match<W: Word>(u: W, v: W) -> bool {
    gcd(u, v) > W::one()
}

/// Indeterminate iff the value exceeds 23 or is composite.
#[inline]
pub fn is_indet<W: Word>(v: W) -> bool {
    let raw = v.widen();
    raw > 23 || !PRIME_TABLE[raw as usize]
}

#[inline]
pub fn compare_letters<W: Word>(u: EncodedLetter<W>, v: EncodedLetter<W>) -> Ordering {
    u.cmp(&v)
}

/// A string of encoded letters together with the alphabet they decode against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodedString<W> {
    letters: Vec<EncodedLetter<W>>,
    alphabet: Alphabet,
}

impl<W: Word> EncodedString<W> {
    /// Validates every value against `alphabet`.
    pub fn from_values(values: impl IntoIterator<Item = W>, alphabet: &Alphabet) -> Result<Self> {
        alphabet.check_word::<W>()?;
        let letters = values
            .into_iter()
            .map(|v| alphabet.letter(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(EncodedString {
            letters,
            alphabet: alphabet.clone(),
        })
    }

    pub fn from_letters(letters: Vec<EncodedLetter<W>>, alphabet: &Alphabet) -> Result<Self> {
        alphabet.check_word::<W>()?;
        for l in &letters {
            alphabet.decode_mask(l.0)?;
        }
        Ok(EncodedString {
            letters,
            alphabet: alphabet.clone(),
        })
    }

    pub(crate) fn from_letters_unchecked(
        letters: Vec<EncodedLetter<W>>,
        alphabet: Alphabet,
    ) -> Self {
        EncodedString { letters, alphabet }
    }

    /// Encodes a regular string, one character per letter.
    pub fn from_regular_str(s: &str, alphabet: &Alphabet) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| alphabet.encode(std::iter::once(c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(EncodedString {
            letters,
            alphabet: alphabet.clone(),
        })
    }

    pub fn letters(&self) -> &[EncodedLetter<W>] {
        &self.letters
    }

    pub fn values(&self) -> impl Iterator<Item = W> + '_ {
        self.letters.iter().map(|l| l.0)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based position of the first indeterminate letter.
    pub fn first_indet(&self) -> Option<usize> {
        self.letters
            .iter()
            .position(|l| l.is_indet())
            .map(|p| p + 1)
    }

    pub fn is_regular(&self) -> bool {
        self.first_indet().is_none()
    }

    pub fn count_indet(&self) -> usize {
        self.letters.iter().filter(|l| l.is_indet()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dna_letter(set: &str) -> u32 {
        Alphabet::dna().encode::<u32>(set.chars()).unwrap().value()
    }

    #[test]
    fn build_alphabet_products() {
        let dna = Alphabet::new("acgt").unwrap();
        assert_eq!(dna.primes(), &[2, 3, 5, 7]);
        assert_eq!(dna.max_product(), 210);
        assert_eq!(dna, Alphabet::dna());

        let unary = Alphabet::new("a").unwrap();
        assert_eq!(unary.primes(), &[2]);
        assert_eq!(unary.max_product(), 2);

        let nine = Alphabet::new("abcdefghi").unwrap();
        assert_eq!(nine.max_product(), 223_092_870);
        assert_eq!(nine.max_product(), MAX_PRODUCT);
    }

    #[test]
    fn build_alphabet_errors() {
        assert_eq!(
            Alphabet::new("abcdefghij"),
            Err(Error::AlphabetTooLarge(10))
        );
        assert_eq!(Alphabet::new("aba"), Err(Error::DuplicateCharacter('a')));
        assert_eq!(Alphabet::new(""), Err(Error::EmptyAlphabet));
        assert_eq!(Alphabet::new("a[b"), Err(Error::InvalidCharacter('[')));
    }

    #[test]
    fn encode_dna_examples() {
        assert_eq!(dna_letter("a"), 2);
        assert_eq!(dna_letter("ac"), 6);
        assert_eq!(dna_letter("at"), 14);
        assert_eq!(dna_letter("cg"), 15);
        assert_eq!(dna_letter("acgt"), 210);
        assert_eq!(dna_letter("tgca"), 210);
    }

    #[test]
    fn encode_errors() {
        let dna = Alphabet::dna();
        assert_eq!(
            dna.encode::<u32>("ax".chars()),
            Err(Error::UnknownCharacter('x'))
        );
        assert_eq!(dna.encode::<u32>("".chars()), Err(Error::EmptySet));
    }

    #[test]
    fn decode_examples() {
        let dna = Alphabet::dna();
        let l = |v: u32| dna.letter(v).unwrap();
        assert_eq!(dna.decode(l(6)).unwrap(), vec!['a', 'c']);
        assert_eq!(dna.decode(l(2)).unwrap(), vec!['a']);
        assert_eq!(dna.decode(l(210)).unwrap(), vec!['a', 'c', 'g', 't']);
        // 11 is outside the DNA primes, 4 is not squarefree.
        assert_eq!(dna.letter(11u32), Err(Error::NotInAlphabet(11)));
        assert_eq!(dna.letter(4u32), Err(Error::NotInAlphabet(4)));
        assert_eq!(dna.letter(1u32), Err(Error::NotInAlphabet(1)));
    }

    #[test]
    fn matching_examples() {
        assert!(letters_match(2u32, 6));
        assert!(letters_match(6u32, 15));
        assert!(!letters_match(2u32, 15));
        // reflexive, symmetric, not transitive
        assert!(letters_match(6u32, 6));
        assert!(letters_match(2u32, 6) && letters_match(6u32, 3) && !letters_match(2u32, 3));
    }

    #[test]
    fn indet_examples() {
        assert!(!is_indet(23u32));
        assert!(is_indet(6u32));
        assert!(is_indet(210u32));
        assert!(!is_indet(2u8));
        assert!(is_indet(MAX_PRODUCT));
    }

    #[test]
    fn induced_order() {
        let dna = Alphabet::dna();
        let enc = |s: &str| dna.encode::<u32>(s.chars()).unwrap();
        assert_eq!(compare_letters(enc("a"), enc("g")), Ordering::Less);
        assert_eq!(compare_letters(enc("ac"), enc("t")), Ordering::Less);
        assert_eq!(compare_letters(enc("at"), enc("cg")), Ordering::Less);
        let mut chain = [
            enc("cg"),
            enc("t"),
            enc("a"),
            enc("at"),
            enc("ac"),
            enc("g"),
        ];
        chain.sort();
        let decoded: Vec<String> = chain
            .iter()
            .map(|&l| dna.decode(l).unwrap().into_iter().collect())
            .collect();
        assert_eq!(decoded, ["a", "g", "ac", "t", "at", "cg"]);
    }

    #[test]
    fn word_width_checked() {
        let nine = Alphabet::first_letters(9).unwrap();
        assert!(matches!(
            nine.encode::<u16>("a".chars()),
            Err(Error::WordTooNarrow { bits: 16, .. })
        ));
        assert!(Alphabet::dna().check_word::<u8>().is_ok());
        assert_eq!(
            Alphabet::dna()
                .encode::<u8>("acgt".chars())
                .unwrap()
                .value(),
            210u8
        );
    }

    #[test]
    fn string_regularity() {
        let dna = Alphabet::dna();
        let s = EncodedString::<u32>::from_values([2, 6, 5, 14, 7, 15], &dna).unwrap();
        assert_eq!(s.first_indet(), Some(2));
        assert_eq!(s.count_indet(), 3);
        assert!(EncodedString::<u32>::from_regular_str("acgt", &dna)
            .unwrap()
            .is_regular());
        assert!(EncodedString::<u32>::from_values([2, 22], &dna).is_err());
    }
}
