use thiserror::Error;

/// Errors raised by the engine. Every numeric routine is exact, so the
/// variants describe precondition and resource failures, never rounding.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size mismatch: |alpha| = {alpha}, |beta| = {beta}")]
    SizeMismatch { alpha: u32, beta: u32 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("work bound exceeded: {needed} steps requested, limit {limit}")]
    Resource { needed: u128, limit: u128 },

    #[error("key outside table bounds: {0}")]
    OutOfBounds(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("inconclusive fit: {0}")]
    Inconclusive(String),

    #[error("closed form available only for genus <= {max}, got {genus}")]
    UnsupportedGenus { genus: u32, max: u32 },

    #[error("excluded case (g, n) = ({g}, {n})")]
    Excluded { g: u32, n: usize },

    #[error("closed form does not apply: {0}")]
    Exceptional(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
