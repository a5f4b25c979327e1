use eulerob_core::Error;

/// Failure of one invocation, with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("schema: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] Error),
    /// A cross-check disagreed; the report was still printed.
    #[error("check failed: {0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Schema(_) => 2,
            CliError::Core(e) => match e {
                Error::Parse { .. }
                | Error::Context(_)
                | Error::InvalidInput(_)
                | Error::EmptyScheme
                | Error::DimensionMismatch(_) => 2,
                Error::ResourceLimit(_) => 3,
                Error::SeedInstability(_) => 4,
                Error::Validation(_) => 5,
            },
            CliError::CheckFailed(_) => 6,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_are_distinct_per_class() {
        let code = |e: Error| CliError::Core(e).exit_code();
        assert_eq!(code(Error::Parse { pos: 0, msg: "x".into() }), 2);
        assert_eq!(code(Error::InvalidInput("x".into())), 2);
        assert_eq!(code(Error::ResourceLimit("x".into())), 3);
        assert_eq!(code(Error::SeedInstability("x".into())), 4);
        assert_eq!(code(Error::Validation("x".into())), 5);
        assert_eq!(CliError::Io("x".into()).exit_code(), 1);
        assert_eq!(CliError::Schema("x".into()).exit_code(), 2);
        assert_eq!(CliError::CheckFailed("x".into()).exit_code(), 6);
    }
}
