use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular map: {0}")]
    Singular(String),
    #[error("coefficients are not separable: {0}")]
    NotSeparable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("d^2 != 0 between degrees {upper} and {lower}: entry ({row}, {col}) is {value}")]
    DSquaredNonzero {
        upper: i64,
        lower: i64,
        row: usize,
        col: usize,
        value: String,
    },
    #[error("complexes differ: {0}")]
    IsoMismatch(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
