use thiserror::Error;

/// Errors reported by the library.
///
/// The two variants are deliberately coarse: `InvalidInput` means the call
/// can never succeed (a violated precondition or malformed data), while
/// `BudgetExceeded` means the exact computation was refused because it would
/// materialize or enumerate more objects than the configured limit allows.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn budget(msg: impl Into<String>) -> Self {
        Error::BudgetExceeded(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
