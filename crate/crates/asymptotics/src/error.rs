use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AsymptoticsError {
    #[error("need at least {needed} nonzero trailing coefficients, have {have}")]
    InsufficientData { needed: usize, have: usize },
}
