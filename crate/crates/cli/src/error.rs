use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{context}{source}")]
    Core {
        context: String,
        #[source]
        source: twcert::Error,
    },
    #[error("manifest {path}: {source}")]
    Manifest {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Input(_) | CliError::Manifest { .. } => EXIT_INPUT,
            CliError::Output(_) => EXIT_INPUT,
            CliError::Core { source, .. } => match source {
                twcert::Error::OverCap { .. }
                | twcert::Error::TooManyVertices(_)
                | twcert::Error::EnumerationTooLarge(_) => EXIT_CAPABILITY,
                twcert::Error::Certificate(_) => EXIT_VIOLATION,
                _ => EXIT_INPUT,
            },
        }
    }

    pub(crate) fn core(context: impl Into<String>, source: twcert::Error) -> Self {
        CliError::Core {
            context: context.into(),
            source,
        }
    }
}

impl From<twcert::Error> for CliError {
    fn from(source: twcert::Error) -> Self {
        CliError::core("", source)
    }
}
