use thiserror::Error;

/// Errors produced anywhere in the group, character and graph pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("empty generator list")]
    NoGenerators,

    #[error("group of order {order} is too large to enumerate (bound {bound})")]
    TooLarge { order: u128, bound: u64 },

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    /// Signals a broken invariant inside the pipeline, never bad user input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }

    pub(crate) fn internal(message: impl Into<String>) -> Self {
        Error::Internal(message.into())
    }

    /// Short machine-readable category, used by the CLI's first error line.
    pub fn category(&self) -> &'static str {
        match self {
            Error::DegreeMismatch { .. } | Error::InvalidPermutation(_) | Error::NoGenerators => {
                "input"
            }
            Error::TooLarge { .. } => "too-large",
            Error::Parse { .. } => "parse",
            Error::InvalidParameter(_) => "input",
            Error::Corpus { .. } => "corpus",
            Error::Io(_) => "io",
            Error::Overflow(_) => "overflow",
            Error::Internal(_) => "internal",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
