//! Machine-word abstraction for encoded letters.
//!
//! An encoded letter is a squarefree product of the first `σ ≤ 9` primes, so
//! its magnitude is bounded by the alphabet's maximum product. Any unsigned
//! primitive wide enough for that bound can carry the encoding: `u8` covers
//! the DNA alphabet (`2·3·5·7 = 210`), `u32` covers every supported alphabet.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{PrimInt, Unsigned};

/// Unsigned machine word holding one encoded letter.
pub trait Word:
    PrimInt + Unsigned + Integer + Hash + Debug + Display + Default + Send + Sync + 'static
{
    /// Width in bits.
    const BITS: u32;

    /// Lossless widening; every supported word fits `u64`.
    #[inline]
    fn widen(self) -> u64 {
        // PrimInt guarantees ToPrimitive, and no supported width exceeds 64 bits.
        self.to_u64().unwrap_or(u64::MAX)
    }

    /// Narrowing conversion, `None` if `v` does not fit.
    #[inline]
    fn narrow(v: u64) -> Option<Self> {
        Self::from(v)
    }
}

impl Word for u8 {
    const BITS: u32 = 8;
}
impl Word for u16 {
    const BITS: u32 = 16;
}
impl Word for u32 {
    const BITS: u32 = 32;
}
impl Word for u64 {
    const BITS: u32 = 64;
}

/// `gcd(a, b)` on machine words (binary method via `num-integer`).
#[inline]
pub fn gcd<W: Word>(a: W, b: W) -> W {
    a.gcd(&b)
}
