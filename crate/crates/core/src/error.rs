use alloc::string::String;

use num_rational::BigRational;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("q-integer base must not be 0, 1 or -1")]
    QIntDomain,
    #[error("pole at z = {at}")]
    Pole { at: BigRational },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("malformed braid word: {0}")]
    MalformedWord(String),
    #[error("no braiding is defined between these slot types")]
    TypeMismatch,
    #[error("structural failure: {0}")]
    Structural(String),
    #[error("resource bound exceeded: dimension {dim} > {limit}")]
    ResourceBound { dim: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
