//! Std companion to `lctconv-core`: signal file formats, test-signal
//! generators, and JSON report serialization. The `lctconv` binary is a thin
//! orchestration layer over these modules and the core library.

pub mod gen;
pub mod io;
pub mod report;

use std::fmt;

/// Errors surfaced by the IO layer and the CLI orchestration.
#[derive(Debug)]
pub enum CliError {
    /// Filesystem failure.
    Io {
        path: String,
        source: std::io::Error,
    },
    /// Malformed file content, with location where known.
    Parse {
        path: String,
        line: Option<usize>,
        message: String,
    },
    /// Sample count disagrees with the declared grid.
    GridMismatch { expected: usize, got: usize },
    /// Domain error from the core library.
    Domain(lctconv_core::LctError),
    /// Bad flag combination or malformed flag value (exit code 2).
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
            CliError::Parse {
                path,
                line: Some(line),
                message,
            } => {
                write!(f, "{path}:{line}: {message}")
            }
            CliError::Parse {
                path,
                line: None,
                message,
            } => write!(f, "{path}: {message}"),
            CliError::GridMismatch { expected, got } => {
                write!(
                    f,
                    "grid mismatch: header declares {expected} samples, found {got}"
                )
            }
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<lctconv_core::LctError> for CliError {
    fn from(e: lctconv_core::LctError) -> Self {
        CliError::Domain(e)
    }
}
