use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph on {n} vertices exceeds the capacity of {max} vertices")]
    CapacityExceeded { n: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex sets overlap")]
    OverlappingSets,

    #[error("target part is not independent in the host graph")]
    PartNotIndependent,

    #[error("pattern on {pattern} vertices does not fit in a part of size {part}")]
    PatternTooLarge { pattern: usize, part: usize },

    #[error("vertex count mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("coloring is not exact: color {missing} is unused")]
    NonExactColoring { missing: u32 },

    #[error("formula not available: {0}")]
    FormulaDomain(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("greedy clique extension failed: {0}")]
    ExtensionFailed(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
