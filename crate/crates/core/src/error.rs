use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} is not a p-bar core for p = {1}")]
    InvalidCore(String, u32),
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// An arithmetic invariant was violated; always a bug.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
