use std::path::PathBuf;
use std::process::ExitCode;

use affhecke::weyl::WeylError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error at column {}: {message}\n  {input}\n  {caret:>width$}", position + 1, caret = "^", width = position + 1)]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
    #[error("{0}")]
    Domain(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Resource(WeylError),
    #[error("{0} check(s) reported failures")]
    CheckFailed(usize),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::CheckFailed(_) => 1,
            CliError::Usage(_)
            | CliError::Parse { .. }
            | CliError::Domain(_)
            | CliError::Io { .. } => 2,
            CliError::Resource(_) => 3,
        })
    }
}

impl From<WeylError> for CliError {
    fn from(e: WeylError) -> Self {
        match e {
            WeylError::ResourceBound { .. } | WeylError::LengthGuard { .. } => {
                CliError::Resource(e)
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}
