use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization is singular: {0}")]
    SingularPoint(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("tableau is not standard")]
    NotStandard,
    #[error("entry {0} does not occur in the tableau")]
    EntryMissing(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bad partition: {0}")]
    BadPartition(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("parse error at position {pos}: {msg}")]
    ParseError { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
