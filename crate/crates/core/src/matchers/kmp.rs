//! Left-to-right searchers: classic KMP and its indeterminate extension.
//!
//! Loop state follows the usual KMP convention: `i` letters of the text have
//! been consumed and the pattern prefix `q[1..j]` matches `y[i-j+1..i]`, so
//! the current alignment starts at `i - j + 1`.

use crate::arrays::{
    border_array_unchecked, longest_regular_prefix_len, prefix_array_indet, BorderArray,
};
use crate::encoding::{EncodedLetter, EncodedString};
use crate::error::Result;
use crate::word::Word;

use super::{scan_single, validate, Recorder, SearchOptions, SearchOutcome};

/// Classic KMP over regular strings.
pub fn kmp_search_regular<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
) -> Result<SearchOutcome> {
    kmp_search_regular_with(y, q, SearchOptions::default())
}

pub(crate) fn kmp_search_regular_with<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    let (y, q) = validate(y, q, true)?;
    let (n, m) = (y.len(), q.len());
    let mut rec = Recorder::new(opts, n, m);
    let beta = border_array_unchecked(q);

    let (mut i, mut j) = (0, 0);
    rec.start(1);
    while i < n {
        if rec.equal(q[j], y[i]) {
            j += 1;
            i += 1;
            if j == m {
                rec.hit(i - j + 1);
                j = beta.get(j);
                rec.shift(i - j + 1);
            }
        } else {
            if j == 0 {
                i += 1;
            } else {
                j = beta.get(j);
            }
            rec.shift(i - j + 1);
        }
    }
    Ok(rec.finish())
}

/// KMP over indeterminate strings.
///
/// While the matched text window and pattern prefix are both regular, shifts
/// come from the border array of the longest regular prefix of `q`. Otherwise
/// each shift is recomputed from the prefix array of
/// `q[1..j-1] y[i-j+2..i]`, see [`compute_shift`].
pub fn kmp_indet_search<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
) -> Result<SearchOutcome> {
    kmp_indet_search_with(y, q, SearchOptions::default())
}

pub(crate) fn kmp_indet_search_with<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    let (y, q) = validate(y, q, false)?;
    let (n, m) = (y.len(), q.len());
    let mut rec = Recorder::new(opts, n, m);
    if m == 1 {
        scan_single(y, q[0], &mut rec);
        return Ok(rec.finish());
    }

    let ell = longest_regular_prefix_len(q);
    let beta = border_array_unchecked(&q[..ell]);

    let (mut i, mut j) = (0, 0);
    let mut indet_y = false;
    // 1-based position of the rightmost indeterminate text letter matched so far, 0 if none.
    let mut right_pos = 0;

    rec.start(1);
    while i < n {
        if rec.matches(q[j], y[i]) {
            if y[i].is_indet() {
                indet_y = true;
                right_pos = i + 1;
            }
            j += 1;
            i += 1;
            if j == m {
                rec.hit(i - j + 1);
                j = shift_inner(indet_y, y, q, i, j, &beta, ell, &mut rec);
                indet_y = window_has_indet(i, j, right_pos);
                rec.shift(i - j + 1);
            }
        } else {
            if j == 0 {
                i += 1;
            } else {
                j = shift_inner(indet_y, y, q, i, j, &beta, ell, &mut rec);
            }
            indet_y = window_has_indet(i, j, right_pos);
            rec.shift(i - j + 1);
        }
    }
    Ok(rec.finish())
}

/// Whether the matched window `y[i-j+1..i]` holds an indeterminate letter.
#[inline]
fn window_has_indet(i: usize, j: usize, right_pos: usize) -> bool {
    j > 0 && right_pos + j > i
}

/// Length of the next matched prefix after `q[1..j]` matched `y[i-j+1..i]`.
///
/// `i` and `j` are 1-based as in the search loop. When the window is regular
/// (`indet_y` false) and `j ≤ ell`, this is `border[j]`. Otherwise it is the
/// largest `k < j` with `q[1..k] ≈ y[i-k+1..i]`, read off the prefix array
/// of `q' = q[1..j-1] y[i-j+2..i]` at entries `r ∈ j..2(j-1)` whose match
/// runs to the end of `q'`.
#[allow(clippy::too_many_arguments)]
pub fn compute_shift<W: Word>(
    indet_y: bool,
    y: &[EncodedLetter<W>],
    q: &[EncodedLetter<W>],
    i: usize,
    j: usize,
    border: &BorderArray,
    ell: usize,
) -> usize {
    shift_inner(indet_y, y, q, i, j, border, ell, &mut Recorder::scratch())
}

#[allow(clippy::too_many_arguments)]
fn shift_inner<W: Word>(
    indet_y: bool,
    y: &[EncodedLetter<W>],
    q: &[EncodedLetter<W>],
    i: usize,
    j: usize,
    border: &BorderArray,
    ell: usize,
    rec: &mut Recorder,
) -> usize {
    if j == 0 {
        return 0;
    }
    if !indet_y && j <= ell {
        return border.get(j);
    }
    if j == 1 {
        return 0;
    }
    let mut q_prime = Vec::with_capacity(2 * (j - 1));
    q_prime.extend_from_slice(&q[..j - 1]);
    q_prime.extend_from_slice(&y[i + 1 - j..i]);
    rec.built_prefix_array(q_prime.len());
    let pi = prefix_array_indet(&q_prime);

    let mut max = 0;
    for r in j..=2 * (j - 1) {
        let v = pi.get(r);
        if max < v && v == 2 * j - r - 1 {
            max = v;
        }
    }
    max
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrays::border_array_regular;
    use crate::encoding::Alphabet;
    use crate::matchers::bf_search;
    use crate::textio::parse_bracket;

    fn enc(s: &str) -> EncodedString<u32> {
        parse_bracket(s, &Alphabet::new("abc").unwrap())
            .unwrap()
            .to_encoded()
            .unwrap()
    }

    fn traced(y: &EncodedString<u32>, q: &EncodedString<u32>) -> SearchOutcome {
        kmp_indet_search_with(
            y,
            q,
            SearchOptions {
                trace_alignments: true,
            },
        )
        .unwrap()
    }

    #[test]
    fn worked_example_walkthrough() {
        let out = traced(&enc("aabaabaa[ab]baa[ac]"), &enc("aabaa"));
        assert_eq!(out.matches.positions(), &[1, 4, 8]);
        assert_eq!(out.alignments, vec![1, 4, 7, 8]);
    }

    #[test]
    fn shift_after_indeterminate_mismatch() {
        // Mismatch at y[10] against q[4]: q[1..3] matched y[7..9].
        let y = enc("aabaabaa[ab]baa[ac]");
        let q = enc("aabaa");
        let beta = border_array_regular(q.letters()).unwrap();
        assert_eq!(
            compute_shift(true, y.letters(), q.letters(), 9, 3, &beta, 5),
            2
        );
    }

    #[test]
    fn shift_after_regular_full_match() {
        let y = enc("aabaabaa[ab]baa[ac]");
        let q = enc("aabaa");
        let beta = border_array_regular(q.letters()).unwrap();
        assert_eq!(
            compute_shift(false, y.letters(), q.letters(), 5, 5, &beta, 5),
            2
        );
    }

    #[test]
    fn shift_single_matched_letter() {
        let y = enc("[ab]c");
        let q = enc("[ab]c");
        let beta = border_array_regular(&q.letters()[..0]).unwrap();
        assert_eq!(
            compute_shift(true, y.letters(), q.letters(), 1, 1, &beta, 0),
            0
        );
        assert_eq!(
            compute_shift(false, y.letters(), q.letters(), 1, 0, &beta, 0),
            0
        );
    }

    #[test]
    fn regular_examples_match_bf() {
        let y = enc("aabaabaaabaa");
        for p in ["aabaa", "aabaabaaabaa", "ccc", "a", "ba"] {
            let q = enc(p);
            let expect = bf_search(&y, &q).unwrap().matches;
            assert_eq!(kmp_search_regular(&y, &q).unwrap().matches, expect, "{p}");
            assert_eq!(kmp_indet_search(&y, &q).unwrap().matches, expect, "{p}");
        }
        assert_eq!(
            kmp_search_regular(&y, &y).unwrap().matches.positions(),
            &[1]
        );
        assert!(kmp_search_regular(&y, &enc("ccc"))
            .unwrap()
            .matches
            .is_empty());
    }

    #[test]
    fn regular_reduction_counts() {
        let y = enc("aabaabaaabaabacabaab");
        let q = enc("abaab");
        let a = kmp_search_regular_with(
            &y,
            &q,
            SearchOptions {
                trace_alignments: true,
            },
        )
        .unwrap();
        let b = traced(&y, &q);
        assert_eq!(a.letter_comparisons, b.letter_comparisons);
        assert_eq!(a.alignments, b.alignments);
        assert_eq!(b.prefix_arrays_built, 0);
    }

    #[test]
    fn set_pattern_hits_every_compatible_position() {
        let y = enc("abcab[bc]ca");
        let q = enc("[ab]");
        let expect = bf_search(&y, &q).unwrap().matches;
        assert_eq!(expect.positions(), &[1, 2, 4, 5, 6, 8]);
        assert_eq!(kmp_indet_search(&y, &q).unwrap().matches, expect);
    }

    #[test]
    fn quadratic_remark_cases() {
        // Both force a prefix array on nearly every shift.
        let y = enc(&"a".repeat(40));
        let q = enc(&format!("[ab]{}", "c".repeat(5)));
        assert!(kmp_indet_search(&y, &q).unwrap().matches.is_empty());

        let y = enc(&"[ac]".repeat(40));
        let q = enc("ab");
        let out = kmp_indet_search(&y, &q).unwrap();
        assert!(out.matches.is_empty());
    }
}
