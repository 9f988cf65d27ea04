use thiserror::Error;

/// Library-wide error type.
///
/// `InvalidArgument` marks a precondition violated by the caller;
/// `Inconsistency` marks a condition that theory guarantees cannot happen
/// (singular multiplicity system, inexact alternant division, ...), so seeing
/// one means a bug, not bad input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    pub fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Inconsistency(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
