use thiserror::Error;

/// Errors raised by board construction, move generation and the search oracles.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("unsupported piece: {0}")]
    UnsupportedPiece(String),

    #[error("computation infeasible: {0}")]
    ComputationInfeasible(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// A bounded search stopped early; `last_completed` is the last parameter
    /// value that was fully evaluated, if any.
    #[error("partial result ({}): {reason}", last_completed.map_or("no n completed".to_string(), |n| format!("completed up to n = {n}")))]
    PartialResult {
        last_completed: Option<u32>,
        reason: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("field format error: {0}")]
    Format(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
