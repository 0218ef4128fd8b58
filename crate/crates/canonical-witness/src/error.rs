//! Error type shared by every module of the crate.

use std::fmt;

/// Library-wide error.
///
/// The variants map one-to-one onto the CLI exit codes: malformed input and
/// parse failures are exit 1, resource limits are exit 4. A resource limit is
/// never a wrong answer; it means a search ceiling or step budget was hit
/// before the question could be decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The input violates a documented precondition.
    MalformedInput(String),
    /// A configured ceiling or step budget was exceeded before an answer
    /// was reached.
    ResourceLimit(String),
    /// The structure is valid but too small for any branch of an extraction
    /// algorithm to run. Distinct from malformed input.
    InsufficientInput(String),
    /// Text input could not be parsed; carries a 1-based line number.
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::MalformedInput(m) => write!(f, "malformed input: {m}"),
            Error::ResourceLimit(m) => write!(f, "resource limit: {m}"),
            Error::InsufficientInput(m) => write!(f, "insufficient input: {m}"),
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedInput(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::ResourceLimit(msg.into())
    }

    pub fn insufficient(msg: impl Into<String>) -> Self {
        Error::InsufficientInput(msg.into())
    }
}
