use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or parameters out of range.
    #[error("{0}")]
    Validation(String),
    /// An anchor, a linearization or an acceptance check failed.
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Compute(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for validation, 3 for anchor and verification failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Compute(_) | CliError::Io(_) => 1,
        }
    }
}

fn classify(msg: String, fatal: bool) -> CliError {
    if fatal {
        CliError::Verification(msg)
    } else {
        CliError::Compute(msg)
    }
}

fn series_fatal(e: &tangle_series::SeriesError) -> bool {
    matches!(e, tangle_series::SeriesError::SingularLinearization { .. })
}

fn sixvertex_fatal(e: &tangle_sixvertex::SixVertexError) -> bool {
    use tangle_sixvertex::SixVertexError as E;
    match e {
        E::AnchorMismatch { .. } => true,
        E::Series(s) => series_fatal(s),
        _ => false,
    }
}

impl From<tangle_census::CensusError> for CliError {
    fn from(e: tangle_census::CensusError) -> Self {
        let fatal = matches!(&e, tangle_census::CensusError::Series(s) if series_fatal(s));
        classify(e.to_string(), fatal)
    }
}

impl From<tangle_sixvertex::SixVertexError> for CliError {
    fn from(e: tangle_sixvertex::SixVertexError) -> Self {
        let fatal = sixvertex_fatal(&e);
        classify(e.to_string(), fatal)
    }
}

impl From<tangle_oriented::OrientedError> for CliError {
    fn from(e: tangle_oriented::OrientedError) -> Self {
        use tangle_oriented::OrientedError as E;
        let fatal = match &e {
            E::Series(s) => series_fatal(s),
            E::SixVertex(s) => sixvertex_fatal(s),
            _ => false,
        };
        classify(e.to_string(), fatal)
    }
}

impl From<tangle_oracle::OracleError> for CliError {
    fn from(e: tangle_oracle::OracleError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<tangle_critical::CriticalError> for CliError {
    fn from(e: tangle_critical::CriticalError) -> Self {
        CliError::Compute(e.to_string())
    }
}

impl From<tangle_asymptotics::AsymptoticsError> for CliError {
    fn from(e: tangle_asymptotics::AsymptoticsError) -> Self {
        CliError::Compute(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tangle_series::SeriesError;
    use tangle_sixvertex::SixVertexError;

    #[test]
    fn exit_codes() {
        let anchor = || SixVertexError::AnchorMismatch {
            anchor: "b0 at tau^2".into(),
            expected: "-6-12x".into(),
            found: "0".into(),
        };
        assert_eq!(CliError::from(anchor()).exit_code(), 3);
        assert_eq!(
            CliError::from(tangle_oriented::OrientedError::SixVertex(anchor())).exit_code(),
            3
        );
        let singular = SeriesError::SingularLinearization { order: 3 };
        assert_eq!(
            CliError::from(tangle_census::CensusError::Series(singular)).exit_code(),
            3
        );
        assert_eq!(
            CliError::from(tangle_census::CensusError::DivisibilityFailure).exit_code(),
            1
        );
        assert_eq!(CliError::Validation("x".into()).exit_code(), 2);
    }
}
