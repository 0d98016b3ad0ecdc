//! Command-line driver: configuration, caching, rendering and the
//! acceptance suite.

pub mod acceptance;
mod cache;
mod cli;
mod error;
mod run;

pub use cache::ResultCache;
pub use cli::{Cli, Command, Format, NMode, Observable, Source};
pub use error::CliError;
pub use run::{run, Output, CRITICAL_MAX_DIGITS, GENERAL_MAX_ORACLE, GENERAL_MAX_PAPER, ORIENTED_MAX};
