//! Right-to-left searchers: classic Boyer–Moore and its indeterminate extension.
//!
//! Alignment `i` (1-based) places `q[1]` under `y[i]`. Letters are compared
//! from `q[m]` down; on a mismatch at `q[j]` the shift is the largest of the
//! bad-character and good-suffix shifts, never less than 1.

use crate::arrays::{longest_regular_suffix_len, prefix_array_indet};
use crate::encoding::{Alphabet, EncodedLetter, EncodedString};
use crate::error::Result;
use crate::word::Word;

use super::{scan_single, validate, Recorder, SearchOptions, SearchOutcome};

/// Rightmost occurrence of each base character in each pattern prefix.
///
/// `get(c, j)` is the largest `k ≤ j` such that `q[k]` contains character
/// `c` (0-based alphabet index), or 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadCharTable {
    primes: &'static [u32],
    cols: usize,
    table: Vec<u32>,
}

impl BadCharTable {
    #[inline]
    pub fn get(&self, c: usize, j: usize) -> usize {
        self.table[c * self.cols + j] as usize
    }

    pub fn sigma(&self) -> usize {
        self.primes.len()
    }

    /// Pattern length `m`; prefix lengths run over `0..=m`.
    pub fn pattern_len(&self) -> usize {
        self.cols - 1
    }
}

/// Builds the `σ × (m+1)` bad-character table in `O(mσ)`.
pub fn build_bad_char_table<W: Word>(q: &[EncodedLetter<W>], alphabet: &Alphabet) -> BadCharTable {
    let primes = alphabet.primes();
    let cols = q.len() + 1;
    let mut table = vec![0u32; primes.len() * cols];
    for (c, &p) in primes.iter().enumerate() {
        let p = W::narrow(u64::from(p));
        let row = &mut table[c * cols..(c + 1) * cols];
        for (k, letter) in q.iter().enumerate() {
            let contains = p.is_some_and(|p| letter.value() % p == W::zero());
            row[k + 1] = if contains { (k + 1) as u32 } else { row[k] };
        }
    }
    BadCharTable {
        primes,
        cols,
        table,
    }
}

/// Shift that aligns the mismatched text letter `v` (compared against
/// `q[j]`) with the rightmost pattern letter left of `j` it matches.
///
/// Returns `j` when no such letter exists, moving the pattern past `v`.
pub fn bad_char_shift<W: Word>(table: &BadCharTable, v: EncodedLetter<W>, j: usize) -> usize {
    let raw = v.value().widen();
    let rightmost = table
        .primes
        .iter()
        .enumerate()
        .filter(|(_, &p)| raw.is_multiple_of(u64::from(p)))
        .map(|(c, _)| table.get(c, j - 1))
        .max()
        .unwrap_or(0);
    j - rightmost
}

/// Strong good-suffix shifts of a regular pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodSuffixTable(Vec<usize>);

impl GoodSuffixTable {
    /// Linear-time construction from the suffix-length array.
    pub fn new<W: Word>(q: &[EncodedLetter<W>]) -> Self {
        let m = q.len();
        let suff = suffix_lengths(q);
        let mut gs = vec![m; m];
        // Case 3: a prefix of q is a suffix of the matched part.
        let mut j = 0;
        for i in (0..m).rev() {
            if suff[i] == i + 1 {
                while j < m - 1 - i {
                    if gs[j] == m {
                        gs[j] = m - 1 - i;
                    }
                    j += 1;
                }
            }
        }
        // Case 2: the matched suffix reoccurs with a different letter before it.
        for i in 0..m.saturating_sub(1) {
            gs[m - 1 - suff[i]] = m - 1 - i;
        }
        GoodSuffixTable(gs)
    }

    /// Shift after a mismatch at 1-based `j`.
    #[inline]
    pub fn mismatch_shift(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    /// Shift after a full match, the smallest period of the pattern.
    #[inline]
    pub fn full_match_shift(&self) -> usize {
        self.0[0]
    }
}

/// `suff[i]`: length of the longest common suffix of `q[..=i]` and `q`.
fn suffix_lengths<W: Word>(q: &[EncodedLetter<W>]) -> Vec<usize> {
    let m = q.len();
    let rev: Vec<_> = q.iter().rev().copied().collect();
    // Z-array of the reversed pattern.
    let mut z = vec![0usize; m];
    if m > 0 {
        z[0] = m;
    }
    let (mut left, mut right) = (0, 0);
    for k in 1..m {
        let mut len = if k < right {
            z[k - left].min(right - k)
        } else {
            0
        };
        while k + len < m && rev[k + len] == rev[len] {
            len += 1;
        }
        z[k] = len;
        if k + len > right {
            left = k;
            right = k + len;
        }
    }
    (0..m).map(|i| z[m - 1 - i]).collect()
}

/// Good-suffix shifts for matches that stay inside the regular suffix of an
/// indeterminate pattern.
///
/// Entry `L` is the shift after `L` letters matched, all of them inside the
/// regular suffix of length `limit`, against regular text. The matched text
/// then equals `q[m-L+1..m]`, so a shift `s` is viable iff every overlapping
/// `q[p-s] ≈ q[p]` for `p > m-L`. A shift is also ruled out when the letter
/// it brings under the mismatched text position is a subset of `q[m-L]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuffixShiftTable(Vec<usize>);

impl SuffixShiftTable {
    /// `O(m · limit)` construction, `limit ≤ m`.
    pub fn new<W: Word>(q: &[EncodedLetter<W>], limit: usize) -> Self {
        let m = q.len();
        let lowest = m - limit + 1;
        // bad[s]: rightmost p ≥ lowest with q[p-s] ≉ q[p], 0 if none.
        let mut bad = vec![0usize; m];
        for (s, slot) in bad.iter_mut().enumerate().skip(1) {
            *slot = (lowest.max(s + 1)..=m)
                .rev()
                .find(|&p| !q[p - s - 1].matches(q[p - 1]))
                .unwrap_or(0);
        }
        let shifts = (0..=limit)
            .map(|matched| {
                let j = m - matched;
                (1..m)
                    .find(|&s| bad[s] <= j && (s >= j || !q[j - s - 1].is_subset_of(q[j - 1])))
                    .unwrap_or(m)
            })
            .collect();
        SuffixShiftTable(shifts)
    }

    #[inline]
    pub fn mismatch_shift(&self, j: usize, m: usize) -> usize {
        self.0[m - j]
    }

    /// Only present when built with `limit == m`.
    pub fn full_match_shift(&self, m: usize) -> Option<usize> {
        self.0.get(m).copied()
    }
}

/// Good-suffix shift computed from the text itself.
///
/// `matchedlen` letters ending at `y[i+m-1]` matched the pattern suffix
/// (`m` after a full match). With `t` the last `min(matchedlen, m-1)` of
/// those text letters, builds `q' = reverse(t) reverse(q[1..m-1])` and
/// returns the smallest shift `s` such that the pattern, moved by `s`, still
/// agrees with `t` wherever the two overlap. Entry `k` of the prefix array of
/// `q'` witnesses shift `k - |t|`.
pub fn indet_gsr_shift<W: Word>(
    y: &[EncodedLetter<W>],
    q: &[EncodedLetter<W>],
    i: usize,
    matchedlen: usize,
) -> usize {
    gsr_inner(y, q, i, matchedlen, &mut Recorder::scratch())
}

fn gsr_inner<W: Word>(
    y: &[EncodedLetter<W>],
    q: &[EncodedLetter<W>],
    i: usize,
    matchedlen: usize,
    rec: &mut Recorder,
) -> usize {
    let m = q.len();
    let t_len = matchedlen.min(m - 1);
    if t_len == 0 {
        return 1;
    }
    let end = i + m - 1;
    let mut q_prime = Vec::with_capacity(t_len + m - 1);
    q_prime.extend(y[end - t_len..end].iter().rev());
    q_prime.extend(q[..m - 1].iter().rev());
    rec.built_prefix_array(q_prime.len());
    let pi = prefix_array_indet(&q_prime);

    let len = q_prime.len();
    let rindex = (t_len + 1..=len)
        .find(|&k| pi.get(k) >= t_len.min(len - k + 1))
        .unwrap_or(len + 1);
    m - (len + 1 - rindex)
}

/// Classic Boyer–Moore over regular strings.
pub fn bm_search_regular<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
) -> Result<SearchOutcome> {
    bm_search_regular_with(y, q, SearchOptions::default())
}

pub(crate) fn bm_search_regular_with<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    let alphabet = q.alphabet();
    let (y, q) = validate(y, q, true)?;
    let (n, m) = (y.len(), q.len());
    let mut rec = Recorder::new(opts, n, m);
    let bad_char = build_bad_char_table(q, alphabet);
    let good_suffix = GoodSuffixTable::new(q);

    let mut i = 1;
    while i + m - 1 <= n {
        rec.start(i);
        let mut shift = 1;
        match (1..=m).rev().find(|&j| !rec.equal(q[j - 1], y[i + j - 2])) {
            Some(j) => {
                let skip_bc = bad_char_shift(&bad_char, y[i + j - 2], j);
                let skip_gs = good_suffix.mismatch_shift(j);
                shift = shift.max(skip_bc).max(skip_gs);
            }
            None => {
                rec.hit(i);
                shift = shift.max(good_suffix.full_match_shift());
            }
        }
        i += shift;
        rec.out.shifts_taken += 1;
    }
    Ok(rec.finish())
}

/// Good-suffix source for alignments whose examined letters are all regular.
enum RegularRule {
    Classic(GoodSuffixTable),
    Suffix(SuffixShiftTable),
}

/// Boyer–Moore over indeterminate strings.
///
/// If every text letter examined at an alignment is regular and the matched
/// part stays inside the regular suffix of `q`, the good-suffix shift comes
/// from a precomputed table. Otherwise it is recomputed from the text by
/// [`indet_gsr_shift`].
pub fn bm_indet_search<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
) -> Result<SearchOutcome> {
    bm_indet_search_with(y, q, SearchOptions::default())
}

pub(crate) fn bm_indet_search_with<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    let alphabet = q.alphabet();
    let (y, q) = validate(y, q, false)?;
    let (n, m) = (y.len(), q.len());
    let mut rec = Recorder::new(opts, n, m);
    if m == 1 {
        scan_single(y, q[0], &mut rec);
        return Ok(rec.finish());
    }

    let ell = longest_regular_suffix_len(q);
    let bad_char = build_bad_char_table(q, alphabet);
    let regular_rule = if ell == m {
        RegularRule::Classic(GoodSuffixTable::new(q))
    } else {
        RegularRule::Suffix(SuffixShiftTable::new(q, ell))
    };

    let mut i = 1;
    while i + m - 1 <= n {
        rec.start(i);
        let mut shift = 1;
        let mut indet_y = false;
        let mut mismatch = None;
        for j in (1..=m).rev() {
            let v = y[i + j - 2];
            if v.is_indet() {
                indet_y = true;
            }
            if !rec.matches(q[j - 1], v) {
                mismatch = Some(j);
                break;
            }
        }
        match mismatch {
            Some(j) => {
                let skip_bc = bad_char_shift(&bad_char, y[i + j - 2], j);
                let matched = m - j;
                let skip_gs = if indet_y || matched > ell {
                    gsr_inner(y, q, i, matched, &mut rec)
                } else {
                    match &regular_rule {
                        RegularRule::Classic(t) => t.mismatch_shift(j),
                        RegularRule::Suffix(t) => t.mismatch_shift(j, m),
                    }
                };
                shift = shift.max(skip_bc).max(skip_gs);
            }
            None => {
                rec.hit(i);
                let skip_gs = match &regular_rule {
                    RegularRule::Classic(t) if !indet_y => t.full_match_shift(),
                    _ => gsr_inner(y, q, i, m, &mut rec),
                };
                shift = shift.max(skip_gs);
            }
        }
        i += shift;
        rec.out.shifts_taken += 1;
    }
    Ok(rec.finish())
}
