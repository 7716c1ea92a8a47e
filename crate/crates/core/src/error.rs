use thiserror::Error;

/// Errors raised by triangle construction, the elementary operations and the
/// text/JSON front ends. All positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("negative entry {value} at chute {chute}, column {column}")]
    NegativeEntry { chute: usize, column: usize, value: i64 },
    #[error("ladder violation: y[{chute},{column}] = {value} < y[{upper_chute},{upper_column}] = {upper}")]
    LadderViolation { chute: usize, column: usize, value: u32, upper_chute: usize, upper_column: usize, upper: u32 },
    #[error("dimension vectors differ: {left:?} vs {right:?}")]
    DimMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("operation needs size at least 2, got {0}")]
    Size(usize),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("{op}(chute {chute}, column {column}) is not defined")]
    UndefinedMove { op: &'static str, chute: usize, column: usize },
    #[error("new ladder is not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("no positive top-chute entry at or after column {0}")]
    InfiniteI(usize),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
