//! Error types shared across the crate.

use std::path::PathBuf;

/// Crate-wide error type. The `class` string doubles as the machine-parsable
/// prefix the CLI prints on failure (`error[domain]: ...`).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A quantity or parameter violates a domain precondition (non-positive
    /// coefficient, alpha outside (0,1), and so on).
    #[error("{0}")]
    Domain(String),

    /// A scenario or policy specification is inconsistent.
    #[error("{0}")]
    Spec(String),

    /// A fitting problem is unidentified (degenerate design matrix).
    #[error("{0}")]
    Identification(String),

    /// An operation that requires output-ordered input received unordered data.
    #[error("{0}")]
    Ordering(String),

    /// Configuration file could not be parsed or validated.
    #[error("{0}")]
    Config(String),

    /// I/O failure, annotated with the path involved.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn spec(msg: impl Into<String>) -> Self {
        Error::Spec(msg.into())
    }

    pub fn identification(msg: impl Into<String>) -> Self {
        Error::Identification(msg.into())
    }

    pub fn ordering(msg: impl Into<String>) -> Self {
        Error::Ordering(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Stable one-word class used as the CLI error prefix and FFI status code.
    pub fn class(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Spec(_) => "spec",
            Error::Identification(_) => "identification",
            Error::Ordering(_) => "ordering",
            Error::Config(_) => "config",
            Error::Io { .. } => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
