use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fracstefan_core::Error),

    #[error("configuration: {0}")]
    Config(String),

    #[error("reading config file: {0}")]
    ConfigFile(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("{0} of {1} rows failed")]
    RowsFailed(usize, usize),

    #[error("verification failed: {0}")]
    VerifyFailed(String),
}

impl CliError {
    /// Process exit status for this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(fracstefan_core::Error::NoRoot { .. }) => 3,
            CliError::Core(_) | CliError::Config(_) | CliError::ConfigFile(_) => 2,
            CliError::Io(_) => 1,
            CliError::RowsFailed(..) => 3,
            CliError::VerifyFailed(_) => 4,
        }
    }
}

pub(crate) fn config<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Config(msg.into()))
}
