//! Seeded random instances and a timing harness.
//!
//! Instances are drawn with ChaCha8 (`rand_chacha`), whose output stream is
//! fixed by its specification, so a seed reproduces the same strings across
//! platforms and toolchains. Indeterminate letters are uniform over all
//! subsets of size `2..=σ`; regular letters are uniform singletons.

use std::io::Write;
use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::encoding::{Alphabet, EncodedString};
use crate::error::{Error, Result};
use crate::matchers::Algorithm;
use crate::word::Word;

/// Column order of the benchmark CSV.
pub const CSV_HEADER: &str = "algo,sigma,n,m,k1,k2,seed,trial,time_s,matches,comparisons";

/// One random instance: alphabet size, lengths, indeterminate counts, seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub sigma: usize,
    pub n: usize,
    pub m: usize,
    /// Indeterminate letters in the text.
    pub k1: usize,
    /// Indeterminate letters in the pattern.
    pub k2: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidSpec(msg));
        if !(2..=9).contains(&self.sigma) {
            return fail(format!("sigma {} outside 2..=9", self.sigma));
        }
        if self.m == 0 {
            return fail("pattern length must be positive".into());
        }
        if self.m > self.n {
            return fail(format!("m = {} exceeds n = {}", self.m, self.n));
        }
        if self.k1 > self.n {
            return fail(format!("k1 = {} exceeds n = {}", self.k1, self.n));
        }
        if self.k2 > self.m {
            return fail(format!("k2 = {} exceeds m = {}", self.k2, self.m));
        }
        Ok(())
    }

    pub fn alphabet(&self) -> Result<Alphabet> {
        Alphabet::first_letters(self.sigma)
    }

    /// Same instance shape, different seed.
    pub fn with_seed(self, seed: u64) -> Self {
        GenSpec { seed, ..self }
    }
}

/// Per-trial seed: SplitMix64 finalizer over the base seed and trial index.
pub fn instance_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draws a text with exactly `k1` and a pattern with exactly `k2`
/// indeterminate letters at uniformly chosen distinct positions.
pub fn generate<W: Word>(spec: &GenSpec) -> Result<(EncodedString<W>, EncodedString<W>)> {
    spec.validate()?;
    let alphabet = spec.alphabet()?;
    alphabet.check_word::<W>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let text = random_string(&mut rng, &alphabet, spec.n, spec.k1)?;
    let pattern = random_string(&mut rng, &alphabet, spec.m, spec.k2)?;
    Ok((text, pattern))
}

fn random_string<W: Word, R: Rng>(
    rng: &mut R,
    alphabet: &Alphabet,
    len: usize,
    indet: usize,
) -> Result<EncodedString<W>> {
    let sigma = alphabet.sigma();
    let full: u16 = (1 << sigma) - 1;
    let mut masks: Vec<u16> = (0..len).map(|_| 1 << rng.gen_range(0..sigma)).collect();
    let mut positions = sample(rng, len, indet).into_vec();
    positions.sort_unstable();
    for p in positions {
        masks[p] = loop {
            let m = rng.gen_range(1..=full);
            if m.count_ones() >= 2 {
                break m;
            }
        };
    }
    let letters = masks
        .into_iter()
        .map(|m| alphabet.encode_mask::<W>(m))
        .collect::<Result<Vec<_>>>()?;
    Ok(EncodedString::from_letters_unchecked(
        letters,
        alphabet.clone(),
    ))
}

/// One timed search.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algo: String,
    pub sigma: usize,
    pub n: usize,
    pub m: usize,
    pub k1: usize,
    pub k2: usize,
    /// Seed of the generated instance.
    pub seed: u64,
    pub trial: u64,
    pub time_s: f64,
    pub matches: usize,
    pub comparisons: u64,
}

/// Times every algorithm on `trials` instances of each grid entry.
///
/// Each `(spec, trial)` instance is generated once from
/// `instance_seed(spec.seed, trial)`; each algorithm gets one untimed
/// warm-up run and one timed run on it. Generation is not timed. All
/// algorithms must report the same match count on an instance.
pub fn run_benchmark<F>(
    grid: &[GenSpec],
    algorithms: &[Algorithm],
    trials: u64,
    mut emit: F,
) -> Result<()>
where
    F: FnMut(BenchRecord) -> Result<()>,
{
    for spec in grid {
        spec.validate()?;
        for trial in 0..trials {
            let seed = instance_seed(spec.seed, trial);
            let (text, pattern) = generate::<u32>(&spec.with_seed(seed))?;
            let mut expected: Option<(Algorithm, usize)> = None;
            for &algo in algorithms {
                algo.run(&text, &pattern)?;
                let started = Instant::now();
                let out = algo.run(&text, &pattern)?;
                let time_s = started.elapsed().as_secs_f64();

                let matches = out.matches.len();
                match expected {
                    None => expected = Some((algo, matches)),
                    Some((first, count)) if count != matches => {
                        return Err(Error::MatchCountMismatch {
                            seed,
                            detail: format!("{first} found {count}, {algo} found {matches}"),
                        });
                    }
                    Some(_) => {}
                }
                emit(BenchRecord {
                    algo: algo.name().to_string(),
                    sigma: spec.sigma,
                    n: spec.n,
                    m: spec.m,
                    k1: spec.k1,
                    k2: spec.k2,
                    seed,
                    trial,
                    time_s,
                    matches,
                    comparisons: out.letter_comparisons,
                })?;
            }
        }
    }
    Ok(())
}

/// CSV sink with the documented header.
pub struct CsvSink<W: Write> {
    writer: csv::Writer<W>,
}

impl<W: Write> CsvSink<W> {
    pub fn new(out: W) -> Self {
        let writer = csv::WriterBuilder::new()
            .has_headers(true)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        CsvSink { writer }
    }

    pub fn write(&mut self, record: &BenchRecord) -> Result<()> {
        self.writer.serialize(record)?;
        Ok(())
    }

    pub fn finish(mut self) -> Result<W> {
        self.writer.flush().map_err(|e| Error::Csv(e.to_string()))?;
        self.writer
            .into_inner()
            .map_err(|e| Error::Csv(e.to_string()))
    }
}

/// Grids shaped after the published experiments.
pub mod grids {
    use super::GenSpec;

    /// Fixed text length, growing pattern: `m = i`, `k2 = i / 5`, `1 ≤ i ≤ 19`,
    /// regular text over `σ = 4`.
    pub fn fixed_text_short_patterns(n: usize, seed: u64) -> Vec<GenSpec> {
        (1..=19)
            .map(|i| GenSpec {
                sigma: 4,
                n,
                m: i,
                k1: 0,
                k2: i / 5,
                seed,
            })
            .collect()
    }

    /// Growing text with a fixed 20-letter pattern holding 2 indeterminate letters.
    pub fn growing_text_fixed_pattern(
        steps: impl IntoIterator<Item = usize>,
        seed: u64,
    ) -> Vec<GenSpec> {
        steps
            .into_iter()
            .map(|i| GenSpec {
                sigma: 4,
                n: 1000 * i,
                m: 20,
                k1: 0,
                k2: 2,
                seed,
            })
            .collect()
    }

    /// `n = 1000 i`, `m = 40 i`, `k1 = ⌊0.06 n⌋`, `k2 = 4 i`.
    pub fn scaled_sweep(
        sigma: usize,
        steps: impl IntoIterator<Item = usize>,
        seed: u64,
    ) -> Vec<GenSpec> {
        steps
            .into_iter()
            .map(|i| {
                let n = 1000 * i;
                GenSpec {
                    sigma,
                    n,
                    m: 40 * i,
                    k1: n * 6 / 100,
                    k2: 4 * i,
                    seed,
                }
            })
            .collect()
    }

    /// Short texts: `1 ≤ i ≤ 10`.
    pub fn short_steps() -> std::ops::RangeInclusive<usize> {
        1..=10
    }

    /// Long texts: `100 ≤ i ≤ 1000` in steps of 100.
    pub fn long_steps() -> impl Iterator<Item = usize> {
        (100..=1000).step_by(100)
    }
}
