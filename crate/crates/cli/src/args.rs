//! Command-line surface.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use strq::gadgets::GadgetKind;

#[derive(Debug, Parser)]
#[command(
    name = "strq",
    version,
    about = "Suffix-array queries, repetitiveness measures, compressed indexes and reduction gadgets"
)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Human, global = true)]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print SA, ISA, LCP, PLCP, BWT, LF, LF⁻¹, Φ and Φ⁻¹ of a text.
    Arrays(InputArgs),
    /// Report n, σ, |RL|, z, r, δ and the bound ratios.
    Measures(InputArgs),
    /// Answer LF⁻¹ queries from the run-boundary index and check them.
    Ilf(IlfArgs),
    /// Time LF⁻¹ queries for each predecessor flavor.
    IlfBench(IlfBenchArgs),
    /// Answer LCP range-minimum queries from the differential-LCP grammar.
    LcpRmq(LcpRmqArgs),
    /// Answer longest-common-extension queries from the differential-LCP grammar.
    Lce(LceArgs),
    /// Build reduction gadgets and check every query mapping against its oracle.
    GadgetVerify(GadgetArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// `key: value` lines.
    Human,
    /// One JSON document.
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Bytes as symbols; one trailing newline is dropped.
    Ascii,
    /// Whitespace-separated non-negative integers.
    Ints,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredFlavor {
    /// Y-fast trie.
    Yfast,
    /// Binary search over sorted keys.
    Binary,
    /// Two-level flat search.
    Small,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Text file.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Ascii)]
    pub format: InputFormat,
}

#[derive(Debug, Args)]
pub struct IlfArgs {
    #[command(flatten)]
    pub text: InputArgs,
    /// Positions to query, whitespace-separated; all positions if absent.
    #[arg(long)]
    pub queries: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = PredFlavor::Yfast)]
    pub pred: PredFlavor,
}

#[derive(Debug, Args)]
pub struct IlfBenchArgs {
    /// Text file; a seeded random text is used if absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Ascii)]
    pub format: InputFormat,
    /// Length of the random text.
    #[arg(long, default_value_t = 100_000)]
    pub len: usize,
    /// Alphabet size of the random text.
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    pub sigma: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Queries per repetition.
    #[arg(long, default_value_t = 100_000)]
    pub queries: usize,
    /// Timed repetitions after one warm-up.
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub reps: u32,
}

#[derive(Debug, Args)]
pub struct LcpRmqArgs {
    #[command(flatten)]
    pub text: InputArgs,
    /// Pairs `b e` asking for the smallest argmin of LCP over (b..e].
    #[arg(long)]
    pub queries: Option<PathBuf>,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    /// Number of seeded random ranges checked when no query file is given.
    #[arg(long, default_value_t = 1000)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also report timings.
    #[arg(long)]
    pub bench: bool,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
    pub reps: u32,
}

#[derive(Debug, Args)]
pub struct LceArgs {
    #[command(flatten)]
    pub text: InputArgs,
    /// Pairs `i j` of text positions.
    #[arg(long)]
    pub queries: Option<PathBuf>,
    #[arg(long, default_value_t = 0.5)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 1000)]
    pub random: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "trials"])))]
pub struct GadgetArgs {
    /// lcp-select, isa-count, bwt-color, plcp-pred, phi-pred, ilf-pred or phi-inverse.
    #[arg(long, value_parser = parse_kind)]
    pub kind: GadgetKind,
    /// Permutation length n, set size m, or text length n.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub size: u64,
    /// Every input of the given size.
    #[arg(long)]
    pub exhaustive: bool,
    /// Number of seeded random inputs.
    #[arg(long)]
    pub trials: Option<u64>,
    #[arg(long, default_value_t = 0, requires = "trials")]
    pub seed: u64,
    /// Worker threads; the report does not depend on this.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
}

fn parse_kind(s: &str) -> Result<GadgetKind, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = GadgetKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}
