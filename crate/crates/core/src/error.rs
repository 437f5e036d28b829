use thiserror::Error;

/// Errors raised by state construction and correlation evaluation.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The antisymmetric superposition at `p = 1` has a divergent
    /// normalization; callers must use the Werner-limit constructors.
    #[error("degenerate superposition (p = 1, odd parity): use the Werner-limit operations")]
    LimitRequired,

    /// A numerical procedure failed to converge.
    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("unknown coherent-state family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
