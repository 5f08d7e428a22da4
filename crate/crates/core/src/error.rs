use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the 1-tree has no lowest internal vertex")]
    NoLowestVertex,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("generator index {index} out of range for a module of dimension {dim}")]
    GeneratorRange { index: usize, dim: usize },

    /// A constructor's hypothesis failed; carries the rendered violations.
    #[error("{hypothesis} does not hold ({} violation(s))", violations.len())]
    Hypothesis {
        hypothesis: &'static str,
        violations: Vec<String>,
    },

    #[error("element is not supported inside the window: {0}")]
    OutOfWindow(String),
}
