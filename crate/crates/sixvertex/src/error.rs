use tangle_ring::RingError;
use tangle_series::SeriesError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SixVertexError {
    #[error("bundle order must be at least 2, got {0}")]
    OrderTooLow(usize),
    #[error("anchor {anchor}: expected {expected}, found {found}")]
    AnchorMismatch {
        anchor: String,
        expected: String,
        found: String,
    },
    #[error("coefficient {k} of {series} interpolates to degree {degree}, above the bound {bound}")]
    InterpolationDegree {
        series: &'static str,
        k: usize,
        degree: usize,
        bound: usize,
    },
    #[error("odd power {0} of the nome survived")]
    OddNomeCoefficient(usize),
    #[error("{series} has the wrong parity at order {k}")]
    Parity { series: &'static str, k: usize },
    #[error("malformed bundle: {0}")]
    Parse(String),
    #[error("bundle cache: {0}")]
    Io(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Ring(#[from] RingError),
}
