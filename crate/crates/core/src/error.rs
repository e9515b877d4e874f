use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed data handed to a constructor (asymmetric distances, etc.).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An argument outside the documented domain of an operation.
    #[error("argument out of range: {0}")]
    Argument(String),

    /// Internal invariant broken; indicates a bug rather than bad input.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("eigensolver failed to converge on {rows}x{rows} matrix:\n{dump}")]
    Numerical { rows: usize, dump: String },

    #[error("phase wrap: scale {scale} is below the operator norm {norm}")]
    PhaseWrap { scale: f64, norm: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
