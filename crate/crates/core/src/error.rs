use thiserror::Error;

/// Errors raised by the kernel.
///
/// The variants map onto the CLI exit codes: parse and usage problems are
/// reported separately from domain failures (poles, degeneracies).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("singular matrix")]
    Singular,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
    #[error("configuration error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
