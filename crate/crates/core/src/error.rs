use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A class has the wrong number of coordinates for its surface.
    #[error("shape mismatch: expected {expected} coordinates, got {got}")]
    Shape { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// An orthogonal line is not one of the exceptional basis vectors, so the
    /// contraction would require a change of basis.
    #[error("unsupported contraction: {0}")]
    UnsupportedContraction(String),

    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
