use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("pair is not in the image of the insertion: {0}")]
    NotInImage(String),
    #[error("vertex cap of {cap} exceeded")]
    CapExceeded { cap: usize },
    #[error("crystal structure violated: {0}")]
    Structural(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
