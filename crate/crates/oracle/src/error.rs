use tangle_ring::RingError;
use tangle_series::SeriesError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("order {requested} exceeds the enumeration cap {cap}")]
    OrderCapExceeded { requested: usize, cap: usize },
    #[error("expected a diagram with {expected} legs, got {got}")]
    WrongLegCount { expected: usize, got: usize },
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
