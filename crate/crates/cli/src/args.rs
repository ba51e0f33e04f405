use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use hardy_means::{ExtReal, MeanSpec, SequenceFamily};

#[derive(Debug, Parser)]
#[command(
    name = "hardy-means",
    version,
    about = "Generalized power means M(k,s,q), Hardy partial-sum experiments and parameter classification",
    after_help = "Exit status: 0 success, 1 property failure, 2 domain error, 3 capacity error.\n\
                  HARDY_MEANS_THREADS caps worker threads (0 or unset: one per core)."
)]
pub struct Cli {
    /// Output format; `mean` and `classify --point` default to plain, the rest to csv.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate M(k,s,q) on one vector.
    Mean(MeanArgs),
    /// Hardy partial sums of a mean on a sequence family at logarithmic checkpoints.
    HardySum(HardySumArgs),
    /// Sweep the sharpness sequences and report the largest Hardy ratio seen.
    EstimateConstant(EstimateArgs),
    /// Classify parameters as Hardy, not Hardy, or open.
    Classify(ClassifyArgs),
    /// Run the property suite.
    Verify(VerifyArgs),
    /// Time the enumeration, symmetric-polynomial and Monte Carlo evaluators.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["data", "file"])))]
pub struct MeanArgs {
    /// Subset size.
    #[arg(short)]
    pub k: usize,

    /// Outer exponent (`inf`, `-inf`, decimals or `a/b`).
    #[arg(short, allow_hyphen_values = true)]
    pub s: ExtReal,

    /// Inner exponent.
    #[arg(short, allow_hyphen_values = true)]
    pub q: ExtReal,

    /// Comma-separated positive entries.
    #[arg(long, value_name = "V1,V2,..")]
    pub data: Option<String>,

    /// One positive entry per line; `#` starts a comment.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,

    /// Use the Monte Carlo sampler with this many k-subsets.
    #[arg(long)]
    pub samples: Option<u64>,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct HardySumArgs {
    /// `power:<p>` or `cmn:<k>,<s>,<q>`.
    #[arg(long)]
    pub mean: MeanSpec,

    /// `harmonic`, `harmonic-truncated:<N0>`, `powertail:<alpha>`, `geometric:<r>` or `custom:<a1>,<a2>,..`.
    #[arg(long)]
    pub family: SequenceFamily,

    /// Number of terms.
    #[arg(short = 'N', default_value_t = 100_000)]
    pub n: usize,

    /// Permit the non-summable harmonic family.
    #[arg(long)]
    pub allow_nonsummable: bool,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    #[arg(long, default_value = "cmn:2,1,0")]
    pub mean: MeanSpec,

    /// Length of every sharpness sequence.
    #[arg(short = 'N', default_value_t = 100_000)]
    pub n: usize,

    /// Harmonic prefix lengths to sweep; defaults to 10, 20, 50, .. up to N.
    #[arg(long, value_delimiter = ',', value_name = "N0,..")]
    pub n0: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// A single point `k,s,q`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["grid_k", "grid_s", "grid_q"])]
    pub point: Option<String>,

    /// Range `a..b` (inclusive) or list of subset sizes.
    #[arg(long, default_value = "2..4")]
    pub grid_k: String,

    #[arg(long, allow_hyphen_values = true, default_value = "-1,0,1,2")]
    pub grid_s: String,

    #[arg(long, allow_hyphen_values = true, default_value = "-1,0,1")]
    pub grid_q: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Smaller sample counts and truncations.
    #[arg(long)]
    pub quick: bool,

    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Monte Carlo draws per evaluation.
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,

    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}
