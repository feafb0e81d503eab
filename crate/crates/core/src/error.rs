use thiserror::Error;

/// Failures while reading a graph from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("malformed graph6 length header")]
    BadHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadChar { offset: usize, byte: u8 },
    #[error("graph6 body has {found} characters, expected {expected}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing characters after graph6 body")]
    TrailingGarbage,
    #[error("graph has {n} vertices, cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("adjacency list line {line}: {msg}")]
    AdjList { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is disconnected")]
    Disconnected,
    /// A search that the math guarantees to succeed came back empty, or a
    /// returned certificate failed its own re-check.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
