//! Text formats for indeterminate strings.
//!
//! Bracket syntax: a plain character is a singleton letter, `[xyz]` is the
//! letter `{x, y, z}`. Whitespace and line breaks are ignored. The canonical
//! form lists set members in alphabet order and brackets only sets of size
//! two or more.
//!
//! IUPAC syntax: one nucleotide code per letter over the DNA alphabet
//! `acgt`, case-insensitive. Lines starting with `>` are headers and skipped.

use std::fmt;

use crate::encoding::{Alphabet, EncodedString};
use crate::error::{Error, Result};
use crate::word::Word;

/// A string of character sets over a declared alphabet.
///
/// Each letter is stored as a bitmask, bit `j` selecting the alphabet's
/// `j`-th character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicString {
    masks: Vec<u16>,
    alphabet: Alphabet,
}

impl SymbolicString {
    pub fn new<S: AsRef<[char]>>(letters: &[S], alphabet: &Alphabet) -> Result<Self> {
        let masks = letters
            .iter()
            .map(|set| {
                let mut mask = 0u16;
                for &c in set.as_ref() {
                    mask |= 1 << alphabet.index_of(c).ok_or(Error::UnknownCharacter(c))?;
                }
                if mask == 0 {
                    return Err(Error::EmptySet);
                }
                Ok(mask)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SymbolicString {
            masks,
            alphabet: alphabet.clone(),
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u16] {
        &self.masks
    }

    /// Members of the letter at 0-based `idx`, in alphabet order.
    pub fn letter(&self, idx: usize) -> Vec<char> {
        let mask = self.masks[idx];
        self.alphabet
            .chars()
            .iter()
            .enumerate()
            .filter(|(j, _)| mask & (1 << j) != 0)
            .map(|(_, &c)| c)
            .collect()
    }

    pub fn letters(&self) -> impl Iterator<Item = Vec<char>> + '_ {
        (0..self.len()).map(|i| self.letter(i))
    }

    pub fn is_regular(&self) -> bool {
        self.masks.iter().all(|m| m.count_ones() == 1)
    }

    pub fn to_encoded<W: Word>(&self) -> Result<EncodedString<W>> {
        let letters = self
            .masks
            .iter()
            .map(|&m| self.alphabet.encode_mask::<W>(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(EncodedString::from_letters_unchecked(
            letters,
            self.alphabet.clone(),
        ))
    }

    pub fn from_encoded<W: Word>(e: &EncodedString<W>) -> Result<Self> {
        let alphabet = e.alphabet().clone();
        let masks = e
            .values()
            .map(|v| alphabet.decode_mask(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(SymbolicString { masks, alphabet })
    }

    /// Canonical bracket serialization.
    pub fn serialize_bracket(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SymbolicString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for idx in 0..self.len() {
            let members = self.letter(idx);
            if members.len() == 1 {
                write!(f, "{}", members[0])?;
            } else {
                f.write_str("[")?;
                members.iter().try_for_each(|c| write!(f, "{c}"))?;
                f.write_str("]")?;
            }
        }
        Ok(())
    }
}

/// Parses bracket syntax over `alphabet`.
pub fn parse_bracket(text: &str, alphabet: &Alphabet) -> Result<SymbolicString> {
    let mut masks = Vec::new();
    // Byte offset of the open bracket and the members collected so far.
    let mut open: Option<(usize, u16)> = None;

    for (offset, c) in text.char_indices() {
        if c.is_whitespace() {
            continue;
        }
        match (c, open.as_mut()) {
            ('[', None) => open = Some((offset, 0)),
            ('[', Some(_)) => return Err(Error::UnbalancedBracket { offset }),
            (']', None) => return Err(Error::UnbalancedBracket { offset }),
            (']', Some(&mut (start, mask))) => {
                if mask == 0 {
                    return Err(Error::EmptyBracket { offset: start });
                }
                masks.push(mask);
                open = None;
            }
            (c, Some((_, mask))) => {
                let bit = 1 << alphabet.index_of(c).ok_or(Error::UnknownCharacter(c))?;
                if *mask & bit != 0 {
                    return Err(Error::DuplicateInBracket(c));
                }
                *mask |= bit;
            }
            (c, None) => {
                masks.push(1 << alphabet.index_of(c).ok_or(Error::UnknownCharacter(c))?);
            }
        }
    }
    if let Some((offset, _)) = open {
        return Err(Error::UnbalancedBracket { offset });
    }
    Ok(SymbolicString {
        masks,
        alphabet: alphabet.clone(),
    })
}

// Bit order follows the DNA alphabet: a=1, c=2, g=4, t=8.
fn iupac_mask(code: char) -> Option<u16> {
    let mask = match code.to_ascii_uppercase() {
        'A' => 0b0001,
        'C' => 0b0010,
        'G' => 0b0100,
        'T' => 0b1000,
        'R' => 0b0101,
        'Y' => 0b1010,
        'S' => 0b0110,
        'W' => 0b1001,
        'K' => 0b1100,
        'M' => 0b0011,
        'B' => 0b1110,
        'D' => 0b1101,
        'H' => 0b1011,
        'V' => 0b0111,
        'N' => 0b1111,
        _ => return None,
    };
    Some(mask)
}

/// Parses IUPAC nucleotide codes into a string over `acgt`.
pub fn parse_iupac(text: &str) -> Result<SymbolicString> {
    let mut masks = Vec::with_capacity(text.len());
    for line in text.lines() {
        if line.trim_start().starts_with('>') {
            continue;
        }
        for c in line.chars().filter(|c| !c.is_whitespace()) {
            masks.push(iupac_mask(c).ok_or(Error::UnknownIupacCode(c))?);
        }
    }
    Ok(SymbolicString {
        masks,
        alphabet: Alphabet::dna(),
    })
}
