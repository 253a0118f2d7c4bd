use std::process::ExitCode;

use cliquenet::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },

    #[error(transparent)]
    Lib(#[from] Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 2 for bad input, 3 when a solver or sampler gives up.
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Lib(e) if e.is_numeric() || matches!(e, Error::RetryLimit(_)) => ExitCode::from(3),
            _ => ExitCode::from(2),
        }
    }
}
