use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for {count} generators")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("signature has {requested} generators, above the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("{0}")]
    Domain(String),

    #[error("ideal is not certified closed")]
    NotClosed,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// A computed object violated an identity that must hold in every
    /// Clifford algebra; this always indicates a bug.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}
