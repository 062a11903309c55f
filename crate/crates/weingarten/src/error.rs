use num::BigRational;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WgError {
    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("pole at {0}")]
    PoleAt(BigRational),

    #[error("inversion of zero")]
    InvertZero,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("cap exceeded: n = {n} but the limit for {what} is {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, WgError>;
