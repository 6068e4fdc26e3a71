use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RadoError {
    #[error("invalid equation: {0}")]
    InvalidEquation(String),

    #[error("cannot parse equation text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(String),

    #[error("search instance too large: {0}")]
    TooLarge(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, RadoError>;
