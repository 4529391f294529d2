use alloc::string::String;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("gcd undefined")]
    GcdUndefined,
    #[error("field mismatch")]
    FieldMismatch,
    #[error("precision exhausted")]
    PrecisionExhausted,
    #[error("order exceeds precision")]
    OrderExceedsPrecision,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, message: impl Into<String>) -> Self {
        Self { position, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    EmptyWord,
    #[error("streams agree to horizon {0}")]
    StreamsAgree(usize),
    #[error("alphabet letters must be distinct")]
    DegenerateAlphabet,
    #[error("word index {requested} beyond ladder height {available}")]
    OutOfRange { requested: usize, available: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("insufficient precision: at least {required} known terms needed")]
    InsufficientPrecision { required: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
