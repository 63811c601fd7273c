use std::fmt;
use std::process::ExitCode;

/// Failure classes with their process exit codes.
#[derive(Debug)]
pub enum CliError {
    /// A numerical check or computation failed (exit 1).
    Numerical(String),
    /// Malformed input or configuration (exit 2).
    Usage(String),
    /// A file could not be read or written (exit 3).
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Self::Numerical(_) => 1,
            Self::Usage(_) => 2,
            Self::Io(_) => 3,
        })
    }

    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        Self::Io(format!("{}: {e}", path.display()))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Numerical(m) => write!(f, "numerical failure: {m}"),
            Self::Usage(m) => write!(f, "usage error: {m}"),
            Self::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl From<resonance_core::Error> for CliError {
    fn from(e: resonance_core::Error) -> Self {
        Self::Numerical(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
