use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("validation failed: {0}")]
    ValidationFailed(crate::report::Violation),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("fixed subcomplex is empty")]
    EmptyFixedSet,
    #[error("internal error: {0}")]
    InternalError(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
