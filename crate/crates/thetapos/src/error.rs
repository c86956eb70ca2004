//! Errors of the command-line layer.

use thiserror::Error;

/// A failed command.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or malformed payload; exit code 2.
    #[error("usage: {0}")]
    Usage(String),
    /// The library rejected the input; exit code 1.
    #[error("{0}")]
    Domain(#[from] thetapos_core::Error),
    /// Unreadable file or catalog.
    #[error("io: {0}")]
    Io(String),
}

impl CliError {
    /// Process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io(_) => 1,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Usage(format!("invalid JSON: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
