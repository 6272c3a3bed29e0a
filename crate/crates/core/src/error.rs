use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("{what} = {value} out of range {min}..={max}")]
    Range {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("missing weight for split {0}")]
    MissingWeight(String),

    #[error("network is not externally refined: diagonal {0} can still be added")]
    NotExternallyRefined(String),

    #[error("split system is not circular")]
    NotCircular,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("tree is not binary ({got} internal splits, expected {expected})")]
    NotBinary { got: usize, expected: usize },

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
