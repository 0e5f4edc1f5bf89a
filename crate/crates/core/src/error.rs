use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("antipodal directions: the rotation plane is ambiguous")]
    AntipodalDirections,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("incompatible operator/representation: {0}")]
    Incompatible(String),

    #[error("capacity exceeded at step {step}: {size} points > cap {max}")]
    Capacity { step: usize, size: usize, max: usize },

    #[error("trace too short: {len} steps, need at least {needed}")]
    ShortTrace { len: usize, needed: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
