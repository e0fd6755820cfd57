use thiserror::Error;

/// Errors produced by the optimization library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid range: lower bound {lower} must be strictly below upper bound {upper}")]
    InvalidRange { lower: f64, upper: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid search space: {0}")]
    InvalidSpace(String),
    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
    #[error("empty input")]
    EmptyInput,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown problem id `{0}`")]
    UnknownProblem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
