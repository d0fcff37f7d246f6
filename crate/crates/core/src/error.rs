use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context for a
/// one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("degree {degree} exceeds the expansion cap of {cap}")]
    UnsupportedDegree { degree: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("numeric overflow: {0}")]
    NumericOverflow(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("out of regime: {0}")]
    OutOfRegime(String),

    #[error("search failed: {0}")]
    SearchFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolation(msg.into())
}
