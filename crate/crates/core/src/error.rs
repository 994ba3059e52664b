use thiserror::Error;

use crate::graph::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex names must be non-empty")]
    EmptyVertexName,

    #[error("terminal vertex `{0}` is not in the vertex set")]
    MissingTerminal(VertexId),

    #[error("origin and destination must differ (both are `{0}`)")]
    DegenerateTerminals(VertexId),

    #[error("edge ({0}, {1}) references a vertex outside the vertex set")]
    UnknownVertex(VertexId, VertexId),

    #[error("edge relation has a directed cycle through {0:?}")]
    CycleDetected(Vec<VertexId>),

    #[error("destination `{destination}` is not reachable from origin `{origin}`")]
    Disconnected { origin: VertexId, destination: VertexId },

    #[error("not a two-terminal graph: vertices {vertices:?} and edges {edges:?} lie on no origin-destination path")]
    NotTwoTerminal { vertices: Vec<VertexId>, edges: Vec<(VertexId, VertexId)> },

    #[error("route count exceeds the cap of {0}")]
    RouteExplosion(usize),

    #[error("vertex index {0} is not on the route")]
    NotOnRoute(usize),

    #[error("segment endpoints are out of route order ({0} comes after {1})")]
    OrderViolation(usize, usize),

    #[error("routes order the shared vertices {0} and {1} oppositely")]
    InconsistentOrder(usize, usize),

    #[error("series hinge mismatch: destination `{destination}` of the first graph is not the origin `{origin}` of the second")]
    HingeMismatch { destination: VertexId, origin: VertexId },

    #[error("parallel terminals mismatch: ({0}, {1}) vs ({2}, {3})")]
    TerminalMismatch(VertexId, VertexId, VertexId, VertexId),

    #[error("vertex sets overlap beyond the shared terminals: {0:?}")]
    VertexOverlap(Vec<VertexId>),

    #[error("edges present in both operands: {0:?}")]
    DuplicateEdge(Vec<(VertexId, VertexId)>),

    #[error("({0}, {1}, {2}) is not an allowed 2-path")]
    NotAllowed(usize, usize, usize),

    #[error("face {face:?} of {path:?} is missing from the order-{order} basis")]
    ClosureViolation { order: usize, path: Vec<usize>, face: Vec<usize> },
}

impl Error {
    /// Errors that can only arise from a bug in this crate rather than from bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::ClosureViolation { .. })
    }
}
