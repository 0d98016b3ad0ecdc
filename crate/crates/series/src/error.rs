use tangle_ring::RingError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient {requested} requested beyond truncation order {order}")]
    BeyondTruncation { requested: usize, order: usize },
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("leading coefficient is not a unit")]
    NonUnitLeadingCoefficient,
    #[error("series is not invertible (constant term is not a unit)")]
    NotInvertible,
    #[error("series variables differ: {0} vs {1}")]
    VariableMismatch(String, String),
    #[error("cannot extend a series of order {have} to order {want}")]
    CannotExtend { have: usize, want: usize },
    #[error("singular linearization at order {order}")]
    SingularLinearization { order: usize },
    #[error("system is not square at order {order}: {unknowns} unknowns, {residuals} residuals")]
    NotSquare {
        order: usize,
        unknowns: usize,
        residuals: usize,
    },
    #[error("residual {residual} does not vanish at order {order}")]
    ResidualNonzero { residual: usize, order: usize },
    #[error("residual {residual} is only known to order {have}, need {want}")]
    ResidualTruncated { residual: usize, have: usize, want: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("malformed series: {0}")]
    Parse(String),
}
