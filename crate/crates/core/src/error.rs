use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("family mismatch: {0} vs {1}")]
    FamilyMismatch(String, String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{what} has size {size}, above the configured bound {bound}")]
    BoundExceeded {
        what: String,
        size: u128,
        bound: u128,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
