use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field tag mismatch: sqrt {0} vs sqrt {1}")]
    FieldMismatch(i64, i64),
    #[error("no exact cosine for {0}")]
    NoExactCosine(String),
    #[error("missing value for symbol {0}")]
    MissingSymbol(String),
    #[error("invalid spherical triangle: {0}")]
    InvalidTriangle(String),
    #[error("degenerate simplex")]
    DegenerateSimplex,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("pairing failure: {0}")]
    Pairing(String),
    #[error("io error: {0}")]
    Io(String),
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
