use thiserror::Error;

/// Failures mapped onto the exit-code contract.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("I/O error: {0}")]
    Io(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// 1 bad config, 2 I/O failure, 3 verification failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Io(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

impl From<spin_tetramer::Error> for CliError {
    fn from(e: spin_tetramer::Error) -> Self {
        match e {
            spin_tetramer::Error::InvalidArgument(m) => CliError::Config(m),
            e @ spin_tetramer::Error::Eigensolver(_) => CliError::Verification(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
