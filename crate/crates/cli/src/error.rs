use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] coresat::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use coresat::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                E::InvalidParameter(_)
                | E::DenseLimitExceeded { .. }
                | E::EnumerationLimitExceeded { .. }
                | E::Parse { .. },
            ) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
