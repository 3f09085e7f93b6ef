//! Error-to-exit-code policy: `2` for command-line misuse, `3` for violated
//! preconditions, exhausted budgets, or unusable input data, `1` (set in
//! `main`) for internal failures.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Malformed command line or argument values.
    Usage(String),
    /// Unusable data from stdin or a file.
    Data(String),
    /// A library precondition or budget refusal.
    Domain(cutset_core::Error),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Data(_) | CliError::Domain(_) | CliError::Io(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Data(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<cutset_core::Error> for CliError {
    fn from(e: cutset_core::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
