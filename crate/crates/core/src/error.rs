use thiserror::Error;

use crate::exactla::LinalgError;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("presentation error: {0}")]
    Presentation(String),
    #[error("nilpotency bound {bound} is too small: {detail}")]
    NilpotencyBound { bound: usize, detail: String },
    #[error("invalid vertex index {0}")]
    InvalidVertex(usize),
    #[error("modules are defined over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    Representation(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("internal cross-check failed: {0}")]
    OracleMismatch(String),
    #[error("{location}: {message}")]
    Format { location: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn format(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format { location: location.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
