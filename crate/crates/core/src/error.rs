use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid election: {0}")]
    InvalidElection(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// A solver was called on an instance outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("infeasible generator configuration: {0}")]
    Infeasible(String),

    #[error("value not representable: {0}")]
    NotRepresentable(String),

    #[error("all solvers exceeded their budgets")]
    AllSolversExceeded,

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}
