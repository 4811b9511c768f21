use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error(transparent)]
    Estimator(#[from] extremo::Error),

    #[error(transparent)]
    Clap(#[from] clap::Error),
}

impl CliError {
    /// 2 for configuration and input problems, 3 for numeric or estimator
    /// failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io { .. } | CliError::Clap(_) => 2,
            CliError::Estimator(extremo::Error::Csv(_) | extremo::Error::Io(_)) => 2,
            CliError::Estimator(_) => 3,
        }
    }
}

pub(crate) fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

pub type CliResult<T> = std::result::Result<T, CliError>;
