use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CriticalError {
    #[error("theta = {0} is outside (0, pi)")]
    Domain(String),
    #[error("tolerance {0:e} is below the supported 1e-14")]
    Tolerance(f64),
    #[error("no sign change of the residual in [{lo}, {hi}]")]
    NoRootInBracket { lo: String, hi: String },
    #[error("both roots of the quadratic in g are admissible at theta = {0}")]
    AmbiguousRoot(String),
    #[error("the residual changes sign {0} times in (1, 2)")]
    NotUnique(usize),
    #[error("no real coupling solves the c-channel relation at theta = {0}")]
    NoRealCoupling(String),
    #[error("Newton iteration did not converge")]
    NoConvergence,
}
