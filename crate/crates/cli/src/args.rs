use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Tools for wide-sense frameproof codes and the set families behind them.
///
/// Exit codes: 0 success, 1 property fails, 2 input error, 3 inconclusive or
/// budget exhausted.
#[derive(Debug, Parser)]
#[command(name = "wfp", version)]
pub struct Cli {
    /// Worker threads for search and oracles [default: $WFP_THREADS, else 1]
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether a code file is wide-sense t-frameproof
    Verify {
        /// Code file, or '-' for stdin
        path: PathBuf,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Per-codeword coincidence families and case flags
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Upper bounds on 2-frameproof code size for a range of lengths
    Bounds {
        /// "a..b" (inclusive) or a single length
        #[arg(long = "n-range", value_parser = NRange::from_str)]
        n_range: NRange,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Budgeted search for a large code
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Candidate words to test
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the code here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Symmetric chain decomposition of the subsets of [n]
    Scd {
        #[arg(long)]
        n: usize,
    },
    /// Largest non-2-covering Sperner family on [n]
    Maxfam {
        #[arg(long)]
        n: usize,
        /// Search nodes
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Exact largest t-frameproof code by exhaustive search
    Maxcode {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Order::Asc)]
        order: Order,
        #[command(flatten)]
        report: ReportArgs,
    },
    /// Random code of distinct words
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub json: bool,
    /// Include elapsed time (makes output run-dependent)
    #[arg(long)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Structural,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Asc,
    Desc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("not an integer: {t:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if !(1 <= lo && lo <= hi && hi <= 64) {
            return Err(format!("range {lo}..{hi} must satisfy 1 <= a <= b <= 64"));
        }
        Ok(NRange { lo, hi })
    }
}
