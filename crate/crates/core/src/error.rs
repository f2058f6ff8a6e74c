use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("no bounded regions")]
    NoBoundedRegions,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
