use crate::encoding::EncodedString;
use crate::error::Result;
use crate::word::Word;

use super::{validate, Recorder, SearchOptions, SearchOutcome};

/// Checks every alignment left to right. Ground truth for the other searchers.
pub fn bf_search<W: Word>(y: &EncodedString<W>, q: &EncodedString<W>) -> Result<SearchOutcome> {
    bf_search_with(y, q, SearchOptions::default())
}

pub(crate) fn bf_search_with<W: Word>(
    y: &EncodedString<W>,
    q: &EncodedString<W>,
    opts: SearchOptions,
) -> Result<SearchOutcome> {
    let (y, q) = validate(y, q, false)?;
    let (n, m) = (y.len(), q.len());
    let mut rec = Recorder::new(opts, n, m);
    rec.start(1);
    for start in 0..=n - m {
        let window = &y[start..start + m];
        if q.iter().zip(window).all(|(&a, &b)| rec.matches(a, b)) {
            rec.hit(start + 1);
        }
        if start < n - m {
            rec.shift(start + 2);
        }
    }
    Ok(rec.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::Alphabet;
    use crate::textio::parse_bracket;

    fn run(text: &str, pattern: &str, sigma: &str) -> Vec<usize> {
        let a = Alphabet::new(sigma).unwrap();
        let y = parse_bracket(text, &a)
            .unwrap()
            .to_encoded::<u32>()
            .unwrap();
        let q = parse_bracket(pattern, &a)
            .unwrap()
            .to_encoded::<u32>()
            .unwrap();
        bf_search(&y, &q).unwrap().matches.into_vec()
    }

    #[test]
    fn worked_example_text() {
        assert_eq!(run("aabaabaa[ab]baa[ac]", "aabaa", "abc"), vec![1, 4, 8]);
    }

    #[test]
    fn overlapping_unary() {
        assert_eq!(run("aaaa", "aa", "abc"), vec![1, 2, 3]);
    }

    #[test]
    fn set_text_regular_pattern() {
        // q[1] = a meets every {a,c}; q[2] = b meets none of them.
        let a = Alphabet::new("abc").unwrap();
        let y = parse_bracket("[ac][ac][ac]", &a)
            .unwrap()
            .to_encoded::<u32>()
            .unwrap();
        let q = parse_bracket("ab", &a)
            .unwrap()
            .to_encoded::<u32>()
            .unwrap();
        let oracle: Vec<usize> = (0..=y.len() - q.len())
            .filter(|&s| {
                (0..q.len()).all(|t| {
                    let yl: Vec<char> = a.decode(y.letters()[s + t]).unwrap();
                    let ql: Vec<char> = a.decode(q.letters()[t]).unwrap();
                    yl.iter().any(|c| ql.contains(c))
                })
            })
            .map(|s| s + 1)
            .collect();
        assert!(oracle.is_empty());
        assert_eq!(run("[ac][ac][ac]", "ab", "abc"), oracle);
        assert_eq!(run("[ac][ac][ac]", "a[bc]", "abc"), vec![1, 2]);
    }

    #[test]
    fn comparison_counter() {
        let a = Alphabet::new("ab").unwrap();
        let y = EncodedString::<u32>::from_regular_str("aaab", &a).unwrap();
        let q = EncodedString::<u32>::from_regular_str("ab", &a).unwrap();
        let out = bf_search(&y, &q).unwrap();
        // alignments 1 and 2 fail on the second letter, 3 matches
        assert_eq!(out.letter_comparisons, 6);
        assert_eq!(out.shifts_taken, 2);
        assert_eq!(out.matches.positions(), &[3]);
    }
}
