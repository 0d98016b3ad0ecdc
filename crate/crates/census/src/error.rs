use tangle_oracle::OracleError;
use tangle_ring::RingError;
use tangle_series::SeriesError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CensusError {
    #[error("loop-closing channel is not divisible by n")]
    DivisibilityFailure,
    #[error("requested {requested} crossings but the 2PI data is valid through {validity}")]
    BeyondValidity { requested: usize, validity: usize },
    #[error("2PI data must start at weighted degree 5, found {0}")]
    LowDegree(u32),
    #[error("malformed census table: {0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
