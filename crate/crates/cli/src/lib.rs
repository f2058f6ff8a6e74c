//! Library side of the `arrpair` command-line tool: file formats, the
//! subcommands (each returns its output text and exit code) and SVG output.
//!
//! Exit codes: 0 verified / success, 1 checked and failed (or hypotheses
//! not met), 2 input error.

pub mod commands;
pub mod format;
pub mod render;

use thiserror::Error;

use arrangement_pairing::Error as CoreError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed or unreadable input; exit code 2.
    #[error("{0}")]
    Input(String),
    /// Input was fine but the requested computation does not apply; exit code 1.
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::NoBoundedRegions => CliError::Failed("no bounded regions".into()),
            CoreError::Unsupported(msg) => CliError::Failed(format!("unsupported input: {msg}")),
            other => CliError::Input(other.to_string()),
        }
    }
}
