use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a loop at `{vertex}`")]
    LoopEdge { edge: usize, vertex: String },
    #[error("edge {edge} duplicates ({u}, {v}) with colour {colour}")]
    DuplicateColouredEdge {
        edge: usize,
        u: String,
        v: String,
        colour: i32,
    },
    #[error("edge {edge} names undeclared vertex `{vertex}`")]
    UnknownEndpoint { edge: usize, vertex: String },
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("colour {colour} is not a sign (+1/-1)")]
    NotSigned { colour: i32 },
    #[error("graphs do not share the same labelled vertex set")]
    VertexSetMismatch,
    #[error("rotation system is incomplete: {0}")]
    IncompleteRotation(String),
    #[error("component {component} has Euler characteristic {characteristic}, expected 2")]
    EulerViolation { component: usize, characteristic: i64 },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("assignment is not total: `{0}` unassigned")]
    PartialAssignment(String),
    #[error("enumeration limit exceeded after {found} results")]
    LimitExceeded { found: usize },
    #[error("graph has {vertices} vertices, bound is {bound}")]
    BoundExceeded { vertices: usize, bound: usize },
    #[error("invalid indicator: {0}")]
    InvalidIndicator(String),
    #[error("no positive edge between `{u}` and `{v}`")]
    NoSuchEdge { u: String, v: String },
    #[error("bad vertices: {0}")]
    BadVertices(String),
    #[error("a rotation system is required for this construction")]
    MissingEmbedding,
    #[error("embedding not certified: {0}")]
    UncertifiedEmbedding(String),
    #[error("target has {vertices} vertices; the solver supports at most 64")]
    TargetTooLarge { vertices: usize },
    #[error("search interrupted by deadline")]
    Interrupted,
    #[error("malformed graph document: {0}")]
    Format(String),
}
