use thiserror::Error;

/// Errors raised by the library. The CLI maps each class to an exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (edge lists, rationals, JSON documents).
    #[error("parse error: {0}")]
    Parse(String),

    /// An argument violated an operation's precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A certificate or audit did not hold.
    #[error("verification failed: {0}")]
    Verification(String),

    /// A state that the solver family should never reach (infeasible or
    /// unbounded metric LP, broken optimality certificate).
    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
