//! `indet` command-line front end.
//!
//! Exit status: `search` follows grep (0 = at least one match, 1 = none,
//! 2 = usage or input error). `verify` exits 1 when a searcher disagrees with
//! brute force. Everything else exits 0 on success and 2 on error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use indet_core::benchgen::{grids, instance_seed, CsvSink};
use indet_core::{
    generate, parse_bracket, parse_iupac, run_benchmark, Algorithm, Alphabet, GenSpec,
    SymbolicString, Text, Word,
};

pub const EXIT_MATCH: u8 = 0;
pub const EXIT_NO_MATCH: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "indet",
    version,
    about = "Pattern matching on indeterminate strings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the 1-based positions where the pattern occurs in the text
    Search(SearchArgs),
    /// Cross-check kmp-indet and bm-indet against brute force on random instances
    Verify(VerifyArgs),
    /// Write a random text/pattern pair in bracket syntax
    Gen(GenArgs),
    /// Time searchers over a grid of random instances and emit CSV
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Bracket,
    Iupac,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Positions,
    Csv,
    JsonLines,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value = "kmp-indet", value_parser = parse_algorithm)]
    pub algo: Algorithm,
    #[arg(long, value_enum, default_value_t = Format::Bracket)]
    pub format: Format,
    /// Alphabet characters in prime order (bracket format only)
    #[arg(long, default_value = "acgt")]
    pub alphabet: String,
    #[arg(
        long,
        conflicts_with = "text_file",
        required_unless_present = "text_file"
    )]
    pub text: Option<String>,
    #[arg(long)]
    pub text_file: Option<PathBuf>,
    #[arg(
        long,
        conflicts_with = "pattern_file",
        required_unless_present = "pattern_file"
    )]
    pub pattern: Option<String>,
    #[arg(long)]
    pub pattern_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputMode::Positions)]
    pub output: OutputMode,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of random instances
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
    #[arg(long, default_value_t = 4)]
    pub sigma: usize,
    #[arg(long, default_value_t = 200)]
    pub max_n: usize,
    #[arg(long, default_value_t = 20)]
    pub max_m: usize,
    #[arg(long, env = "INDET_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 4)]
    pub sigma: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub k1: usize,
    #[arg(long, default_value_t = 0)]
    pub k2: usize,
    #[arg(long, env = "INDET_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Write the text here instead of standard output
    #[arg(long)]
    pub text_out: Option<PathBuf>,
    /// Write the pattern here instead of standard output
    #[arg(long)]
    pub pattern_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// σ=4, k1=0, m=i, k2=i/5 for 1 ≤ i ≤ 19 at fixed n
    FixedText,
    /// σ=4, n=1000i, m=20, k1=0, k2=2 for 1 ≤ i ≤ 10
    GrowingText,
    /// n=1000i, m=40i, k1=0.06n, k2=4i for 1 ≤ i ≤ 10
    SweepShort,
    /// n=1000i, m=40i, k1=0.06n, k2=4i for i = 100, 200, ..., 1000
    SweepLong,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Use a predefined grid instead of --n/--m/--k1/--k2
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    #[arg(long, default_value_t = 4)]
    pub sigma: usize,
    /// Text lengths (comma separated); with --preset fixed-text, the single fixed n
    #[arg(long, value_delimiter = ',', default_value = "10000")]
    pub n: Vec<usize>,
    #[arg(long, default_value_t = 20)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub k1: usize,
    #[arg(long, default_value_t = 0)]
    pub k2: usize,
    #[arg(long, value_delimiter = ',', default_value = "bf,kmp-indet,bm-indet", value_parser = parse_algorithm)]
    pub algos: Vec<Algorithm>,
    #[arg(long, default_value_t = 1)]
    pub trials: u64,
    #[arg(long, env = "INDET_SEED", default_value_t = 0)]
    pub seed: u64,
    /// CSV destination, standard output if absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_algorithm(s: &str) -> std::result::Result<Algorithm, String> {
    s.parse().map_err(|e: indet_core::Error| e.to_string())
}

/// Runs one parsed command, returning the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Search(args) => cmd_search(&args, out),
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Gen(args) => cmd_gen(&args, out),
        Command::Bench(args) => cmd_bench(&args, out),
    }
}

fn read_source(inline: &Option<String>, file: &Option<PathBuf>) -> Result<String> {
    match (inline, file) {
        (Some(s), _) => Ok(s.clone()),
        (None, Some(path)) => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
        }
        (None, None) => bail!("no input given"),
    }
}

pub fn cmd_search(args: &SearchArgs, out: &mut dyn Write) -> Result<u8> {
    let text = read_source(&args.text, &args.text_file)?;
    let pattern = read_source(&args.pattern, &args.pattern_file)?;
    let positions = match args.format {
        Format::Iupac => {
            // DNA letters fit one byte.
            search_symbolic::<u8>(args.algo, &parse_iupac(&text)?, &parse_iupac(&pattern)?)?
        }
        Format::Bracket => {
            let alphabet = Alphabet::new(&args.alphabet)?;
            let y = parse_bracket(&text, &alphabet).context("parsing text")?;
            let q = parse_bracket(&pattern, &alphabet).context("parsing pattern")?;
            search_symbolic::<u32>(args.algo, &y, &q)?
        }
    };
    write_positions(&positions, args.output, out)?;
    Ok(if positions.is_empty() {
        EXIT_NO_MATCH
    } else {
        EXIT_MATCH
    })
}

fn search_symbolic<W: Word>(
    algo: Algorithm,
    y: &SymbolicString,
    q: &SymbolicString,
) -> Result<Vec<usize>> {
    let y = y.to_encoded::<W>()?;
    let q = q.to_encoded::<W>()?;
    Ok(algo.run(&y, &q)?.matches.into_vec())
}

fn write_positions(positions: &[usize], mode: OutputMode, out: &mut dyn Write) -> Result<()> {
    match mode {
        OutputMode::Positions => {
            for p in positions {
                writeln!(out, "{p}")?;
            }
        }
        OutputMode::Csv => {
            writeln!(out, "position")?;
            for p in positions {
                writeln!(out, "{p}")?;
            }
        }
        OutputMode::JsonLines => {
            for p in positions {
                writeln!(out, "{}", serde_json::json!({ "position": p }))?;
            }
        }
    }
    Ok(())
}

/// A named searcher under verification.
pub type Searcher<'a> = (
    &'a str,
    &'a dyn Fn(&Text, &Text) -> indet_core::Result<Vec<usize>>,
);

/// First disagreement found by [`verify_with`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub spec: GenSpec,
    pub searcher: String,
    pub text: String,
    pub pattern: String,
    pub expected: Vec<usize>,
    pub got: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub total: u64,
    pub agreed: u64,
    pub counterexample: Option<Counterexample>,
}

/// Shape of the `idx`-th verification instance. Each of `k1`, `k2` is drawn
/// from its two corners (none, all) or uniformly in between.
pub fn verify_spec(args: &VerifyArgs, idx: u64) -> GenSpec {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(args.seed, idx));
    let n = rng.gen_range(1..=args.max_n.max(1));
    let m = rng.gen_range(1..=args.max_m.clamp(1, n));
    let mut corner = |len: usize| match rng.gen_range(0..3) {
        0 => 0,
        1 => len,
        _ => rng.gen_range(0..=len),
    };
    let k1 = corner(n);
    let k2 = corner(m);
    GenSpec {
        sigma: args.sigma,
        n,
        m,
        k1,
        k2,
        seed: rng.gen(),
    }
}

/// Runs `args.count` random instances through every searcher and compares
/// each result with brute force. Stops at the first disagreement.
pub fn verify_with(args: &VerifyArgs, searchers: &[Searcher<'_>]) -> Result<VerifyReport> {
    let mut agreed = 0;
    for idx in 0..args.count {
        let spec = verify_spec(args, idx);
        let (y, q) = generate::<u32>(&spec)?;
        let expected = Algorithm::Bf.run(&y, &q)?.matches.into_vec();
        for (name, search) in searchers {
            let got = search(&y, &q)?;
            if got != expected {
                return Ok(VerifyReport {
                    total: args.count,
                    agreed,
                    counterexample: Some(Counterexample {
                        spec,
                        searcher: name.to_string(),
                        text: SymbolicString::from_encoded(&y)?.serialize_bracket(),
                        pattern: SymbolicString::from_encoded(&q)?.serialize_bracket(),
                        expected,
                        got,
                    }),
                });
            }
        }
        agreed += 1;
    }
    Ok(VerifyReport {
        total: args.count,
        agreed,
        counterexample: None,
    })
}

pub fn report_verify(report: &VerifyReport, out: &mut dyn Write) -> Result<u8> {
    writeln!(out, "{}/{} agree", report.agreed, report.total)?;
    match &report.counterexample {
        None => Ok(EXIT_MATCH),
        Some(c) => {
            writeln!(out, "counterexample ({}):", c.searcher)?;
            writeln!(
                out,
                "  sigma={} n={} m={} k1={} k2={} seed={}",
                c.spec.sigma, c.spec.n, c.spec.m, c.spec.k1, c.spec.k2, c.spec.seed
            )?;
            writeln!(out, "  text:     {}", c.text)?;
            writeln!(out, "  pattern:  {}", c.pattern)?;
            writeln!(out, "  expected: {:?}", c.expected)?;
            writeln!(out, "  got:      {:?}", c.got)?;
            Ok(EXIT_NO_MATCH)
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let kmp = |y: &Text, q: &Text| Algorithm::KmpIndet.run(y, q).map(|o| o.matches.into_vec());
    let bm = |y: &Text, q: &Text| Algorithm::BmIndet.run(y, q).map(|o| o.matches.into_vec());
    let report = verify_with(args, &[("kmp-indet", &kmp), ("bm-indet", &bm)])?;
    report_verify(&report, out)
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<u8> {
    let spec = GenSpec {
        sigma: args.sigma,
        n: args.n,
        m: args.m,
        k1: args.k1,
        k2: args.k2,
        seed: args.seed,
    };
    let (y, q) = generate::<u32>(&spec)?;
    let text = SymbolicString::from_encoded(&y)?.serialize_bracket();
    let pattern = SymbolicString::from_encoded(&q)?.serialize_bracket();
    for (body, dest) in [(text, &args.text_out), (pattern, &args.pattern_out)] {
        match dest {
            Some(path) => fs::write(path, format!("{body}\n"))
                .with_context(|| format!("writing {}", path.display()))?,
            None => writeln!(out, "{body}")?,
        }
    }
    Ok(EXIT_MATCH)
}

pub fn bench_grid(args: &BenchArgs) -> Vec<GenSpec> {
    match args.preset {
        Some(Preset::FixedText) => grids::fixed_text_short_patterns(args.n[0], args.seed),
        Some(Preset::GrowingText) => grids::growing_text_fixed_pattern(1..=10, args.seed),
        Some(Preset::SweepShort) => {
            grids::scaled_sweep(args.sigma, grids::short_steps(), args.seed)
        }
        Some(Preset::SweepLong) => grids::scaled_sweep(args.sigma, grids::long_steps(), args.seed),
        None => args
            .n
            .iter()
            .map(|&n| GenSpec {
                sigma: args.sigma,
                n,
                m: args.m,
                k1: args.k1,
                k2: args.k2,
                seed: args.seed,
            })
            .collect(),
    }
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<u8> {
    let grid = bench_grid(args);
    let bytes = {
        let mut sink = CsvSink::new(Vec::new());
        run_benchmark(&grid, &args.algos, args.trials, |r| sink.write(&r))?;
        sink.finish()?
    };
    match &args.out {
        Some(path) => {
            fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))?
        }
        None => out.write_all(&bytes)?,
    }
    Ok(EXIT_MATCH)
}
