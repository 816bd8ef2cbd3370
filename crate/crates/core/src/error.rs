use thiserror::Error;

/// Errors produced by the tree and algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("colour {colour} is outside 1..={n}")]
    ColourOutOfRange { colour: u16, n: u16 },

    #[error("expected {expected} arguments (one per colour), got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("vertex {0} does not resolve in this forest")]
    InvalidVertex(String),

    #[error("vertex {0} is not in the selected subforest")]
    VertexNotSelected(String),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("q-specification has {got} entries, expected {expected}")]
    QSpecLength { expected: usize, got: usize },

    #[error("degree {degree} exceeds the enumeration budget {budget}")]
    BudgetExceeded { degree: usize, budget: usize },

    #[error("operation requires {required} colours, context has {actual}")]
    ColourCount { required: u16, actual: u16 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
