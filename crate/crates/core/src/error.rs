use crate::graph::{EdgeId, VertexId};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0:?} is listed more than once")]
    DuplicateEdge((VertexId, VertexId)),
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopRejected(VertexId),
    #[error("vertex {vertex} is out of range for a graph on {vertex_count} vertices")]
    DanglingVertexId {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge id {0} is not part of this graph")]
    UnknownEdge(EdgeId),
    #[error("edge sets over universes of size {left} and {right} cannot be combined")]
    UniverseMismatch { left: usize, right: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("every vertex has degree two; the thread partition is undefined")]
    AllDegreesTwo,
    #[error("edges {0:?} do not form a thread of the graph")]
    NotAThread(Vec<EdgeId>),
    #[error("edges {0:?} do not form a circuit of the graph")]
    NotACircuit(Vec<EdgeId>),
    #[error("the thread is not a path-chord of the circuit")]
    NotAPathChord,
    #[error("edge set is not an element of the cycle space")]
    NotEven,
    #[error("target is not in the span of the generators")]
    NotInSpan,
    #[error("more than {cap} circuits; shrink the instance or raise the cap")]
    CircuitExplosion { cap: usize },
    #[error("graph is not a subdivision of a 3-connected graph")]
    NotTop3Connected,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph is a subdivision of K4; no thread can be removed")]
    IsTopK4,
    #[error("circuit is not a non-separating circuit of the reduced graph")]
    NotInNcOfReduced,
    #[error("edge set must be nonempty")]
    EmptyX,
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown corpus graph {0:?}")]
    UnknownName(String),
    #[error("corpus generation failed: {0}")]
    GenerationFailed(String),
}
