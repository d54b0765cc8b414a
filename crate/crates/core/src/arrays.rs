//! Border arrays (regular strings only) and prefix arrays (any string).
//!
//! Both arrays are stored 0-based but their accessors take the 1-based
//! positions used everywhere else in the crate.

use crate::encoding::EncodedLetter;
use crate::error::{Error, Result};
use crate::word::Word;

/// `β[i]`: length of the longest border of the length-`i` prefix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BorderArray(Vec<usize>);

impl BorderArray {
    /// `β[i]` for `1 ≤ i ≤ len`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// `π[i]`: length of the longest substring starting at `i` that matches a prefix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrefixArray(Vec<usize>);

impl PrefixArray {
    /// `π[i]` for `1 ≤ i ≤ len`.
    #[inline]
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

/// Failure function of a regular string, letter equality being integer equality.
///
/// Errors if any letter is indeterminate: `≈` is not transitive, so borders of
/// indeterminate strings cannot be chained this way.
pub fn border_array_regular<W: Word>(s: &[EncodedLetter<W>]) -> Result<BorderArray> {
    if let Some(p) = s.iter().position(|l| l.is_indet()) {
        return Err(Error::IndeterminateLetterPresent { position: p + 1 });
    }
    Ok(border_array_unchecked(s))
}

pub(crate) fn border_array_unchecked<W: Word>(s: &[EncodedLetter<W>]) -> BorderArray {
    let mut beta = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut b = beta[i - 1];
        while b > 0 && s[i] != s[b] {
            b = beta[b - 1];
        }
        if s[i] == s[b] {
            b += 1;
        }
        beta[i] = b;
    }
    BorderArray(beta)
}

/// Prefix array under `≈`, by direct extension at every position.
///
/// Quadratic in the worst case; the strings this is applied to during a
/// search are at most `2(m-1)` letters long.
pub fn prefix_array_indet<W: Word>(s: &[EncodedLetter<W>]) -> PrefixArray {
    let n = s.len();
    let mut pi = vec![0usize; n];
    if n == 0 {
        return PrefixArray(pi);
    }
    pi[0] = n;
    for start in 1..n {
        pi[start] = s[start..]
            .iter()
            .zip(s)
            .take_while(|(a, b)| a.matches(**b))
            .count();
    }
    PrefixArray(pi)
}

/// Largest `ℓ` such that `s[1..ℓ]` is regular.
pub fn longest_regular_prefix_len<W: Word>(s: &[EncodedLetter<W>]) -> usize {
    s.iter().take_while(|l| l.is_regular()).count()
}

/// Largest `ℓ` such that `s[n-ℓ+1..n]` is regular.
pub fn longest_regular_suffix_len<W: Word>(s: &[EncodedLetter<W>]) -> usize {
    s.iter().rev().take_while(|l| l.is_regular()).count()
}
