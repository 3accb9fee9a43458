use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the operation's domain (bad vertex, n too small, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// The instance is too large for the exact method behind the operation.
    #[error("resource guard tripped: {0}")]
    Resource(String),
    /// A proven identity failed to hold. Never expected in practice.
    #[error("invariant violated: {0}")]
    Invariant(String),
    /// Malformed input text.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// Well-formed input that describes an invalid object.
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
