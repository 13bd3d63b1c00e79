//! Library side of the `simplex-forge` command line tool: document
//! parsing and serialization, the verification report, generator name
//! dispatch, and the nullity experiment.

pub mod doc;
pub mod experiment;
pub mod report;
pub mod source;

use thiserror::Error;

/// Errors surfaced by the CLI layer. Parse/usage problems exit with code 2,
/// failed checks with code 1.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid document: {0}")]
    Document(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] simplex_forge::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;
