//! Command-line surface.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(name = "tangles", version, about = "Counting prime alternating tangles up to flypes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Directory for cached results.
    #[arg(long, global = true, env = "TANGLES_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Ignore and do not write cached results.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Worker threads for the diagram enumeration.
    #[arg(long, global = true, env = "TANGLES_THREADS")]
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Flype-corrected census for general n.
    General {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        /// Source of the 2PI data.
        #[arg(long, value_enum, default_value_t = Source::Paper)]
        source: Source,
        /// `symbolic`, or a nonnegative integer value of n.
        #[arg(long, default_value = "symbolic", value_parser = parse_n)]
        n: NMode,
    },
    /// Oriented (two-color) census from the six-vertex series.
    Oriented {
        #[arg(long, default_value_t = 13)]
        max_order: usize,
    },
    /// Critical angle and coupling.
    Critical {
        /// Significant digits printed.
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Growth-rate fit of the oriented counts and heuristic link counts.
    Asymptotics {
        #[arg(long, default_value_t = 13)]
        max_order: usize,
        /// Power of p in the asymptotic law.
        #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
        exponent: f64,
        /// Drop the logarithmic correction.
        #[arg(long)]
        no_log: bool,
    },
    /// Raw bare coefficients from the diagram enumeration.
    Oracle {
        /// Total order in the two couplings.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
        #[arg(long, value_enum, default_value_t = Observable::Gamma1)]
        observable: Observable,
    },
    /// Runs the acceptance suite and prints a pass/fail matrix.
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Source {
    /// Perturbative data through eight crossings.
    Paper,
    /// Re-expansion of the diagram oracle, through five crossings.
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Observable {
    G,
    Gamma1,
    Gamma2,
    F,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NMode {
    Symbolic,
    Integer(u64),
}

fn parse_n(s: &str) -> Result<NMode, String> {
    if s == "symbolic" {
        return Ok(NMode::Symbolic);
    }
    s.parse::<u64>()
        .map(NMode::Integer)
        .map_err(|_| format!("expected `symbolic` or a nonnegative integer, got `{s}`"))
}

impl NMode {
    pub fn key(self) -> String {
        match self {
            NMode::Symbolic => "symbolic".into(),
            NMode::Integer(k) => k.to_string(),
        }
    }
}
