//! Error classification shared by the library and the command-line tool.
//!
//! The variants map one-to-one onto the tool's exit codes: bad input,
//! instances too large for an exact method, and checker/oracle mismatches
//! are kept distinct so callers can react programmatically.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally invalid input: bad parameters, inconsistent sizes,
    /// malformed sets, and similar caller mistakes.
    #[error("input error: {0}")]
    Input(String),

    /// Text that does not conform to the graph or bounds file formats.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Instance exceeds a configured exact-computation limit.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// The enumeration checker and the brute-force oracle returned
    /// different verdicts on the same instance.
    #[error("oracle/checker disagreement: {0}")]
    Disagreement(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn input(message: impl Into<String>) -> Self {
        Error::Input(message.into())
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn capacity(message: impl Into<String>) -> Self {
        Error::Capacity(message.into())
    }

    pub fn disagreement(message: impl Into<String>) -> Self {
        Error::Disagreement(message.into())
    }
}
