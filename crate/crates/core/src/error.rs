use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),
    #[error("negative radicand {0}")]
    NegativeRadicand(String),
    #[error("index out of range: {0}")]
    Domain(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("sequence window too short for {0}")]
    WindowTooShort(String),
    #[error("unknown certificate `{0}`")]
    UnknownCertificate(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
