use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A Laurent division that was expected to be exact left a remainder.
    #[error("division is not exact: {0}")]
    Divisibility(String),

    #[error("incomplete data: {0}")]
    IncompleteData(String),

    /// The inputs cannot describe the configuration the formula assumes.
    #[error("inconsistent input: {0}")]
    Inconsistency(String),

    /// Two independent computations of the same quantity disagree.
    #[error("internal consistency fault: {0}")]
    ConsistencyFault(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
