use std::path::PathBuf;

use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] grouplabel_core::Error),
    #[error("bundled fixture {0} is corrupt: {1}")]
    Fixture(u8, String),
}

impl CliError {
    /// Exit status: 1 when a result failed verification, 3 when a search ran
    /// out of budget, 2 for everything the caller got wrong.
    pub fn exit_code(&self) -> u8 {
        use grouplabel_core::Error as E;
        match self {
            CliError::Core(E::VerificationFailed(_)) => 1,
            CliError::Core(E::BudgetExhausted) => 3,
            _ => 2,
        }
    }
}
