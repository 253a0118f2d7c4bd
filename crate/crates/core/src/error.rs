use thiserror::Error;

/// Errors raised by the library. Each variant maps to one CLI exit class.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("truncation at r_max = {r_max} drops tail mass {tail:e} (limit {limit:e})")]
    Truncation { r_max: usize, tail: f64, limit: f64 },

    #[error("infeasible target: {0}")]
    Infeasible(String),

    #[error("numeric failure: {0}")]
    Numeric(String),

    #[error("gave up after {0} attempts to draw a simple graph")]
    RetryLimit(usize),

    #[error("degenerate graph: {0}")]
    Degenerate(String),

    #[error("malformed input at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }

    /// True for failures of a solver rather than of the caller's input.
    pub fn is_numeric(&self) -> bool {
        matches!(self, Error::Numeric(_) | Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
