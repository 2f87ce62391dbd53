use thiserror::Error;

/// Error type shared by the whole library.
///
/// The variants map onto the CLI exit codes: `Parse` is a usage problem,
/// `Domain` is a precondition violation on otherwise well-formed input,
/// `Integrity` signals that stored data or a computed structure failed a
/// consistency check that should never fail, and `Unavailable` means a
/// requested dataset was not shipped.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integrity error: {0}")]
    Integrity(String),
    #[error("unavailable: {0}")]
    Unavailable(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub(crate) fn integrity(msg: impl Into<String>) -> Error {
    Error::Integrity(msg.into())
}
