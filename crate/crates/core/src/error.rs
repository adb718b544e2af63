use thiserror::Error;

use crate::graph::{EdgeId, Vertex};

/// Errors raised by graph construction and the relation/partition machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate edge [{0},{1}]")]
    DuplicateEdge(Vertex, Vertex),
    #[error("loop at vertex {0}")]
    LoopEdge(Vertex),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("edges {0} and {1} are not adjacent")]
    NotAdjacent(EdgeId, EdgeId),
    #[error("relation and graph do not match")]
    GraphMismatch,
    #[error("partition does not match the vertex set")]
    PartitionMismatch,
    #[error("unknown class id {0}")]
    UnknownClassId(usize),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("at least two distinct class ids are needed for a merge")]
    MergeNeedsTwoClasses,
    #[error("witness relation is not finer than the relation")]
    WitnessNotFiner,
    #[error("relation is not finer than the other relation")]
    NotFiner,
    #[error("relation is not a certified USP-relation")]
    NotCertifiedUsp,
    #[error("relation has {0} classes, exactly two are required")]
    NotTwoClasses(usize),
    #[error("partition is not equitable")]
    NotEquitable,
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("isomorphism check failed: {0}")]
    IsomorphismFailure(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("at least two factors are required")]
    TooFewFactors,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("{0} classes exceed the default style palette")]
    TooManyClasses(usize),
    #[error("graph too large for this operation ({n} vertices, limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("parse error at line {line}, {field}: {message}")]
    Parse {
        line: usize,
        field: String,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
