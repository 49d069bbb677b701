use thiserror::Error;

/// Failure of one command, carrying its exit code class.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable or malformed input. Exit code 2.
    #[error("{0}")]
    Input(String),

    /// Input that parses but cannot form a valid filtration. Exit code 3.
    #[error("{0}")]
    Invariant(String),

    /// `stats --verify` found a difference. Exit code 4.
    #[error("verification failed: {0}")]
    Verify(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Verify(_) => 4,
        }
    }
}

impl From<csd_core::Error> for CliError {
    fn from(e: csd_core::Error) -> Self {
        match e {
            csd_core::Error::Parse { .. } => CliError::Input(e.to_string()),
            other => CliError::Invariant(other.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
