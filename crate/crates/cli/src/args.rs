use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "szeged",
    version,
    about = "Exact edge revised Szeged index workbench for cacti"
)]
pub struct Cli {
    /// Seed for every random draw; echoed into JSON output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads: 1 runs sequentially, 0 sizes the pool to the machine.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Enumeration cap in vertices, at most 12.
    #[arg(long, global = true, env = "SZEGED_MAX_N")]
    pub cap: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    G6,
    Edgelist,
    Human,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Index values of one or more graphs.
    Compute(ComputeArgs),
    /// Emit a named graph.
    Build {
        #[command(subcommand)]
        family: FamilyArg,
    },
    /// Stream the cacti with n vertices and k cycles as graph6.
    Enumerate(EnumerateArgs),
    /// Exhaustive minimum and second minimum over C(n,k).
    Search(SearchArgs),
    /// Check one claim over a universe of cacti.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputSource {
    /// A single graph6 string.
    #[arg(long)]
    pub g6: Option<String>,
    /// An edge-list file (`n m` header, one `u v` per line), or graph6 lines
    /// when the extension is `.g6`.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// graph6 lines from standard input.
    #[arg(long)]
    pub stdin: bool,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputSource,
    /// Include the per-edge partitions.
    #[arg(long)]
    pub edges: bool,
}

#[derive(Debug, Subcommand)]
pub enum FamilyArg {
    /// k triangles at a hub plus pendant vertices.
    C0 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// k quadrangles at a hub plus pendant vertices.
    C1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// C1(n-1,k) with one pendant vertex extended to a path of length two.
    #[command(name = "g-star-1")]
    GStar1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Cycles of the given lengths and pendant vertices at one hub.
    Bundle {
        #[arg(long, value_delimiter = ',')]
        cycles: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        pendants: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Path {
        #[arg(long)]
        n: usize,
    },
    Star {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Every labeled cactus instead of one per isomorphism class.
    #[arg(long)]
    pub labeled: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    /// Cycle count; every feasible one when omitted.
    #[arg(long)]
    pub k: Option<usize>,
    /// Show the second minimum in csv and human output.
    #[arg(long)]
    pub second: bool,
    /// Exit 1 unless the minimum agrees with the minimum bound.
    #[arg(long)]
    pub expect_thm32: bool,
    /// Exit 1 if an applicable second-minimum bound disagrees.
    #[arg(long)]
    pub expect_thm44: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// lemma2.1, lemma2.2-2.3, lemma3.1, lemma4.1, lemma4.2, lemma4.3, thm3.2 or thm4.4.
    pub claim: String,
    /// Every cactus (or every class C(n,k)) with at most this many vertices.
    #[arg(long, conflicts_with_all = ["n", "m"])]
    pub max_n: Option<usize>,
    /// A single class C(n,k); needs --k.
    #[arg(long, requires = "k", conflicts_with = "m")]
    pub n: Option<usize>,
    /// A single class by edge count, n = m - k + 1; needs --k.
    #[arg(long, requires = "k")]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Random samples: cacti for per-graph claims, class members for class claims.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Largest vertex count of the random cacti for the lemmas.
    #[arg(long, default_value_t = szeged_core::verify::DEFAULT_SAMPLE_MAX_N)]
    pub sample_max_n: usize,
}
