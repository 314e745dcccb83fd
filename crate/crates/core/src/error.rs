//! Error types shared by every module.

use thiserror::Error;

/// Library-wide error type.
///
/// The variants map onto the CLI exit codes: `Parse` and `Validation`
/// are input problems (exit 2), `Precondition` is a violated hypothesis
/// of an operation (exit 3), `Structure` is a shape or ring mismatch in
/// library usage (also exit 3 when surfaced through the CLI).
#[derive(Debug, Error)]
pub enum Error {
    /// Shape or ring-descriptor mismatch between operands.
    #[error("structure error: {0}")]
    Structure(String),
    /// A stated hypothesis of the operation does not hold for the input.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Input data fails its own self-consistency checks.
    #[error("validation failed: {0}")]
    Validation(String),
    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),
    /// I/O failure while reading an input file.
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
