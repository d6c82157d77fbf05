use thiserror::Error;

/// Errors shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A size guard refused the request.
    #[error("size guard: {0}")]
    SizeGuard(String),
    /// Input does not have the structural shape the operation needs.
    #[error("shape error: {0}")]
    Shape(String),
    /// The computation could not decide.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
