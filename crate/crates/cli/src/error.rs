use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("verification mismatch: {0}")]
    Mismatch(String),
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("i/o error on {path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    /// 0 success, 1 validation, 2 mismatch, 3 resource cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) | CliError::Io { .. } => 1,
            CliError::Mismatch(_) => 2,
            CliError::ResourceCap(_) => 3,
        }
    }

    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<smex_core::ParamError> for CliError {
    fn from(e: smex_core::ParamError) -> Self {
        CliError::Validation(e.to_string())
    }
}
