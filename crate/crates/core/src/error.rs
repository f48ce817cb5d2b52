use thiserror::Error;

/// Errors raised by the library.
///
/// Everything except [`Error::Invariant`] describes bad or inconsistent
/// input. `Invariant` means a mathematical cross-check failed on input that
/// passed validation, which points at a bug or at a false claim about the
/// input (for example a wrong `p_g`).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("enumeration of {needed} candidates exceeds the guard of {limit} (set SINGLAB_MAX_ENUM to raise it)")]
    GuardExceeded { needed: u128, limit: u128 },

    #[error("invariant violated [{check}]: {detail}")]
    Invariant { check: String, detail: String },
}

impl Error {
    pub(crate) fn invariant(check: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Invariant {
            check: check.into(),
            detail: detail.into(),
        }
    }

    /// True for failed internal cross-checks, false for input problems.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
