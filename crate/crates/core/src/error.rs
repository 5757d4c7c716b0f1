use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("list size of vertex {0} must be positive")]
    NonPositiveListSize(usize),
    #[error("list size vector has {got} entries, expected {expected}")]
    SizeCount { expected: usize, got: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("coefficient overflow")]
    Overflow,
    #[error("{0}")]
    LimitExceeded(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
