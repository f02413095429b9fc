//! Library surface of the `scx` command-line tool: file formats,
//! configuration, the analyze report, and the verification harness.

pub mod analyze;
pub mod config;
pub mod format;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("brute-force cap exceeded at dimension {dimension}: {detail}")]
    CapExceeded { dimension: usize, detail: String },
    #[error(transparent)]
    Core(#[from] scx_core::Error),
    #[error("io error: {0}")]
    Io(String),
}

impl CliError {
    /// 0 pass, 1 check failure, 2 usage/parse error, 3 cap exceeded.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::CapExceeded { .. } => 3,
            CliError::Core(scx_core::Error::BeyondBruteForceCap { .. }) => 3,
            _ => 2,
        }
    }
}
