use thiserror::Error;

use crate::graph::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is not bipartite; odd cycle {0:?}")]
    OddCycle(Vec<usize>),

    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),

    #[error("probability {0} is not in [0, 1]")]
    InvalidProbability(f64),

    #[error("coloring covers {got} vertices, graph has {expected}")]
    PartialColoring { expected: usize, got: usize },

    #[error("color 0 assigned to vertex {0}; colors start at 1")]
    ZeroColor(usize),

    #[error("vertex order is not a permutation of 0..{0}")]
    InvalidPermutation(usize),

    #[error("edge ({}, {}) is not in the graph", .0 .0, .0 .1)]
    ForeignEdge(Edge),

    #[error("edge set is not a matching: {0}")]
    NotAMatching(String),

    #[error("edge set is not edge-dominating")]
    NotDominating,

    #[error("invalid extended clique: {0}")]
    InvalidExtendedClique(String),

    #[error("coloring is not a Grundy coloring of the complement")]
    NotGrundy,

    #[error("color class {color} has {size} vertices; complements of bipartite graphs allow at most 2")]
    OversizedClass { color: usize, size: usize },

    #[error("{what} limited to {cap}, input has {got}")]
    SizeCap {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("no sample satisfied the degree bound after {0} attempts")]
    RetriesExhausted(usize),
}

pub(crate) fn check_cap(what: &'static str, cap: usize, got: usize) -> Result<()> {
    if got > cap {
        Err(Error::SizeCap { what, cap, got })
    } else {
        Ok(())
    }
}
