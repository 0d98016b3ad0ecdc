use tangle_ring::RingError;
use tangle_series::SeriesError;
use tangle_sixvertex::SixVertexError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum OrientedError {
    #[error("{requested} crossings need a bundle of order {requested}, have {have}")]
    BundleTooShort { requested: usize, have: usize },
    #[error("bundle coefficient of {series} at tau^{k} is not even in theta")]
    OddCoefficient { series: &'static str, k: usize },
    #[error("{row} coefficient at g^{k} is not a nonnegative integer: {value}")]
    NotACount { row: &'static str, k: usize, value: String },
    #[error("malformed census: {0}")]
    Parse(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    SixVertex(#[from] SixVertexError),
}
