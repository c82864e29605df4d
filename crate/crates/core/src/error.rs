use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("c2 must be even and positive, got {0}")]
    BadChernClass(i64),
    #[error("twist {l} is outside the range where the spectrum determines h{index}")]
    TwistOutOfRange { index: u8, l: i64 },
    #[error("invalid spectrum multiplicities {0:?}")]
    BadSpectrum(Vec<u32>),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("shape is not homotopy-free: a = {a:?}, b = {b:?}")]
    NotHomotopyFree { a: Vec<i64>, b: Vec<i64> },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed presentation: {0}")]
    Presentation(String),
    #[error("{0}")]
    Parse(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}

pub type Result<T> = std::result::Result<T, Error>;
