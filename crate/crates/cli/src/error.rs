use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("catalogue unavailable: {0}")]
    MissingCatalogue(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 1,
            Error::Schema { .. } | Error::Io { .. } => 2,
            Error::MissingCatalogue(_) => 3,
        }
    }

    pub fn validation(e: impl std::fmt::Display) -> Self {
        Error::Validation(e.to_string())
    }
}
