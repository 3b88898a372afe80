use thiserror::Error;

/// Errors raised by the combinatorial kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The shape is a connected ribbon, so no cyclic extension exists.
    #[error("not extendable: {shape} is a connected ribbon, and connected ribbons admit no cyclic descent extension")]
    NotExtendable { shape: String },

    /// A size or count limit was exceeded, or exact arithmetic overflowed.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// An internal consistency check failed.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn overflow() -> Error {
    Error::Resource("64-bit integer overflow".into())
}

/// Checked `a + b`.
pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or_else(overflow)
}

/// Checked `a * b`.
pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or_else(overflow)
}
