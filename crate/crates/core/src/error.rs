use thiserror::Error;

use crate::chordal::NotChordal;
use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),

    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(Vertex, Vertex),

    #[error("edge ({0}, {1}) not present")]
    MissingEdge(Vertex, Vertex),

    #[error("missing problem line")]
    MissingProblemLine,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator: {0}")]
    InvalidGenerator(String),

    #[error("order is not a permutation of the {n} vertices: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("coloring covers {got} vertices but the graph has {n}")]
    PartialColoring { got: usize, n: usize },

    #[error("color 0 on vertex {0}; colors are 1-based")]
    ZeroColor(Vertex),

    #[error("coloring is not a valid Grundy coloring of the graph")]
    InvalidColoring,

    #[error(transparent)]
    NotChordal(#[from] NotChordal),

    #[error("{what} is capped at n <= {cap}, got n = {n}")]
    OracleCapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },
}
