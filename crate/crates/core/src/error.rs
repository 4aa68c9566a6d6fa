use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("relation violated: {0}")]
    Relation(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("internal failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Error {
        Error::Invalid(msg.into())
    }

    pub fn check(msg: impl Into<String>) -> Error {
        Error::Check(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Error {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
