use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("{0} vertices requested, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex counts differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("graph6 input, byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("edge list, line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error(
        "labeled enumeration is capped at n = 7 (got {0}); supply a graph6 corpus file instead"
    )]
    EnumerationTooLarge(usize),
    #[error(
        "graph on {n} vertices exceeds the exact solver cap of {cap}; \
         raise the cap or use a heuristic upper bound"
    )]
    OverCap { n: usize, cap: usize },
    #[error("not an elimination order: {0}")]
    NotAPermutation(String),
    #[error("bramble has no elements")]
    EmptyBramble,
    #[error("invalid bramble: {0}")]
    InvalidBramble(String),
    #[error("graph is not a k-tree for any k")]
    NotKTree,
    #[error("graph is isomorphic to Q_{n}^{k}; no separating clique exists")]
    IsQnk { n: usize, k: usize },
    #[error("certificate failed verification: {0}")]
    Certificate(String),
}
