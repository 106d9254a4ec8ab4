use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Fast,
    Reference,
}

/// Modular Ackermann maps on Z_N: evaluation, dynamics, statistics, hashing.
#[derive(Debug, Parser)]
#[command(name = "modack", version)]
pub struct Cli {
    /// Output file (for `reproduce`, an output directory).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Seed for sample-mode domains.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate A_N(m, n).
    Eval {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        arg: u64,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
    },
    /// Export the level-m table of Z_N as `n,value` CSV.
    Table {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        level: u32,
    },
    /// Preperiod, period and trajectory of one starting point.
    Orbit {
        #[arg(long)]
        modulus: u64,
        /// level:M | tetration | shifted3 | affine:A,B
        #[arg(long)]
        map: String,
        #[arg(long, default_value_t = 0)]
        start: u64,
        /// Maximum tail / cycle members listed.
        #[arg(long, default_value_t = crate::funcgraph::DEFAULT_MEMBER_CAP)]
        cap: usize,
    },
    /// Cycle census of a self-map's functional graph.
    Graph {
        #[arg(long)]
        modulus: u64,
        /// level:M | tetration | shifted3 | affine:A,B
        #[arg(long)]
        map: String,
    },
    /// Output histogram, deviation metrics, chi-square and avalanche.
    #[command(group(ArgGroup::new("source").required(true).args(["level", "map"])))]
    Stats {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        level: Option<u32>,
        #[arg(long)]
        map: Option<String>,
        /// full | range:A..B | sample:S[@SEED]
        #[arg(long, default_value = "full")]
        domain: String,
    },
    /// Avalanche coefficient for one neighbor definition.
    #[command(group(ArgGroup::new("source").required(true).args(["level", "map"])))]
    Avalanche {
        #[arg(long)]
        modulus: u64,
        #[arg(long)]
        level: Option<u32>,
        #[arg(long)]
        map: Option<String>,
        /// xor1 | succ | bit:J
        #[arg(long, default_value = "xor1")]
        neighbor: String,
        /// full | range:A..B | sample:S[@SEED]
        #[arg(long, default_value = "full")]
        domain: String,
    },
    /// Evaluate a hash construction from a JSON spec file.
    #[command(group(ArgGroup::new("inputs").required(true).args(["input", "scan"])))]
    Hash {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        input: Option<u64>,
        /// Inclusive range A..B
        #[arg(long)]
        scan: Option<String>,
    },
    /// Measure x -> 2^x mod 2^k against the stabilization claims.
    TetrationCheck {
        #[arg(long)]
        k: u32,
    },
    /// Re-run the deviation / avalanche grid.
    Reproduce {
        #[arg(long, default_value = "table1")]
        experiment: String,
        /// Levels (comma separated); default 3,4.
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<u32>>,
        /// Exponents k (comma separated); default 8,10,12.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<u32>>,
    },
}
