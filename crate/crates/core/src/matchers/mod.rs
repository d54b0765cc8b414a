//! Searchers over encoded strings.
//!
//! Positions are 1-based throughout. `bf`, `kmp_indet` and `bm_indet` accept
//! any encoded strings; `kmp` and `bm` are the classic algorithms and reject
//! indeterminate input.

mod bf;
mod bm;
mod kmp;

use std::fmt;
use std::str::FromStr;

use crate::encoding::{EncodedLetter, EncodedString};
use crate::error::{Error, Result};
use crate::word::Word;

pub use bf::bf_search;
pub use bm::{
    bad_char_shift, bm_indet_search, bm_search_regular, build_bad_char_table, indet_gsr_shift,
    BadCharTable, GoodSuffixTable, SuffixShiftTable,
};
pub use kmp::{compute_shift, kmp_indet_search, kmp_search_regular};

/// Strictly increasing 1-based start positions of the pattern in the text.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatchList(Vec<usize>);

impl MatchList {
    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl IntoIterator for MatchList {
    type Item = usize;
    type IntoIter = std::vec::IntoIter<usize>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

/// Matches plus instrumentation counters for one search.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchOutcome {
    pub matches: MatchList,
    /// One per letter comparison inside the search loop.
    pub letter_comparisons: u64,
    /// One per move of the pattern along the text.
    pub shifts_taken: u64,
    /// One per auxiliary string built to compute a shift.
    pub prefix_arrays_built: u64,
    /// Sum of the lengths of those auxiliary strings.
    pub total_prefix_array_cells: u64,
    /// 1-based alignments visited, in order. Empty unless tracing was requested.
    pub alignments: Vec<usize>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Record every alignment in [`SearchOutcome::alignments`].
    pub trace_alignments: bool,
}

/// Counter sink threaded through the search loops.
pub(crate) struct Recorder {
    out: SearchOutcome,
    trace: bool,
    last_alignment: usize,
}

impl Recorder {
    pub(crate) fn new(opts: SearchOptions, n: usize, m: usize) -> Self {
        Recorder {
            out: SearchOutcome::default(),
            trace: opts.trace_alignments,
            last_alignment: n + 1 - m,
        }
    }

    /// A detached recorder for calling shift routines on their own.
    pub(crate) fn scratch() -> Self {
        Recorder {
            out: SearchOutcome::default(),
            trace: false,
            last_alignment: 0,
        }
    }

    #[inline]
    pub(crate) fn matches<W: Word>(&mut self, a: EncodedLetter<W>, b: EncodedLetter<W>) -> bool {
        self.out.letter_comparisons += 1;
        a.matches(b)
    }

    #[inline]
    pub(crate) fn equal<W: Word>(&mut self, a: EncodedLetter<W>, b: EncodedLetter<W>) -> bool {
        self.out.letter_comparisons += 1;
        a == b
    }

    #[inline]
    pub(crate) fn hit(&mut self, pos: usize) {
        self.out.matches.0.push(pos);
    }

    #[inline]
    pub(crate) fn start(&mut self, alignment: usize) {
        if self.trace && alignment <= self.last_alignment {
            self.out.alignments.push(alignment);
        }
    }

    #[inline]
    pub(crate) fn shift(&mut self, new_alignment: usize) {
        self.out.shifts_taken += 1;
        self.start(new_alignment);
    }

    #[inline]
    pub(crate) fn built_prefix_array(&mut self, len: usize) {
        self.out.prefix_arrays_built += 1;
        self.out.total_prefix_array_cells += len as u64;
    }

    pub(crate) fn finish(self) -> SearchOutcome {
        self.out
    }
}

type LetterPair<'a, W> = (&'a [EncodedLetter<W>], &'a [EncodedLetter<W>]);

/// Shared argument checks; returns the letter slices.
pub(crate) fn validate<'a, W: Word>(
    y: &'a EncodedString<W>,
    q: &'a EncodedString<W>,
    regular_only: bool,
) -> Result<LetterPair<'a, W>> {
    if y.alphabet() != q.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    if q.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if q.len() > y.len() {
        return Err(Error::PatternLongerThanText {
            m: q.len(),
            n: y.len(),
        });
    }
    if regular_only {
        if let Some(position) = q.first_indet().or_else(|| y.first_indet()) {
            return Err(Error::IndeterminateLetterPresent { position });
        }
    }
    Ok((y.letters(), q.letters()))
}

/// Linear scan for single-letter patterns.
pub(crate) fn scan_single<W: Word>(
    y: &[EncodedLetter<W>],
    letter: EncodedLetter<W>,
    rec: &mut Recorder,
) {
    rec.start(1);
    for (idx, &v) in y.iter().enumerate() {
        if rec.matches(letter, v) {
            rec.hit(idx + 1);
        }
        rec.shift(idx + 2);
    }
}

/// Searcher selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Bf,
    Kmp,
    Bm,
    KmpIndet,
    BmIndet,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Bf,
        Algorithm::Kmp,
        Algorithm::Bm,
        Algorithm::KmpIndet,
        Algorithm::BmIndet,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Bf => "bf",
            Algorithm::Kmp => "kmp",
            Algorithm::Bm => "bm",
            Algorithm::KmpIndet => "kmp-indet",
            Algorithm::BmIndet => "bm-indet",
        }
    }

    /// Whether the algorithm accepts indeterminate letters.
    pub fn handles_indeterminate(self) -> bool {
        !matches!(self, Algorithm::Kmp | Algorithm::Bm)
    }

    pub fn run<W: Word>(self, y: &EncodedString<W>, q: &EncodedString<W>) -> Result<SearchOutcome> {
        self.run_with(y, q, SearchOptions::default())
    }

    pub fn run_with<W: Word>(
        self,
        y: &EncodedString<W>,
        q: &EncodedString<W>,
        opts: SearchOptions,
    ) -> Result<SearchOutcome> {
        match self {
            Algorithm::Bf => bf::bf_search_with(y, q, opts),
            Algorithm::Kmp => kmp::kmp_search_regular_with(y, q, opts),
            Algorithm::Bm => bm::bm_search_regular_with(y, q, opts),
            Algorithm::KmpIndet => kmp::kmp_indet_search_with(y, q, opts),
            Algorithm::BmIndet => bm::bm_indet_search_with(y, q, opts),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownAlgorithm(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::Alphabet;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert_eq!(
            "horspool".parse::<Algorithm>(),
            Err(Error::UnknownAlgorithm("horspool".into()))
        );
    }

    #[test]
    fn validation_errors() {
        let abc = Alphabet::new("abc").unwrap();
        let s = |t: &str| EncodedString::<u32>::from_regular_str(t, &abc).unwrap();
        let empty = EncodedString::<u32>::from_values([], &abc).unwrap();
        for a in Algorithm::ALL {
            assert_eq!(a.run(&s("abc"), &empty), Err(Error::EmptyPattern));
            assert_eq!(
                a.run(&s("ab"), &s("abc")),
                Err(Error::PatternLongerThanText { m: 3, n: 2 })
            );
        }
        let dna = EncodedString::<u32>::from_regular_str("acg", &Alphabet::dna()).unwrap();
        assert_eq!(
            Algorithm::Bf.run(&dna, &s("a")),
            Err(Error::AlphabetMismatch)
        );

        let indet = EncodedString::<u32>::from_values([2, 6, 3], &abc).unwrap();
        assert_eq!(
            Algorithm::Kmp.run(&indet, &s("a")),
            Err(Error::IndeterminateLetterPresent { position: 2 })
        );
        assert_eq!(
            Algorithm::Bm.run(&s("abc"), &indet),
            Err(Error::IndeterminateLetterPresent { position: 2 })
        );
    }
}
