use thiserror::Error;

use crate::skeleton::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("paths are not composable: source {source_vertex} differs from range {range_vertex}")]
    NonComposable {
        source_vertex: String,
        range_vertex: String,
    },
    #[error("degree {requested:?} is not below {available:?}")]
    DegreeOutOfRange { requested: Vec<u32>, available: Vec<u32> },
    #[error("degree has {got} coordinates, expected {expected}")]
    DegreeArity { expected: usize, got: usize },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("paths belong to different skeletons")]
    SkeletonMismatch,
    #[error("path range {found} does not match vertex {expected}")]
    RangeMismatch { expected: String, found: String },
    #[error("skeleton is not permissible: {}", .0.summary())]
    InvalidSkeleton(Box<ValidationReport>),
    #[error("action is invalid: {}", .0.summary())]
    InvalidAction(Box<ValidationReport>),
    #[error("cocycle is invalid: {0}")]
    InvalidCocycle(String),
    #[error("vertex `{vertex}` has {incoming} incoming and {outgoing} outgoing edges of color {color}; exactly one of each is required")]
    NonSingletonDegree {
        vertex: String,
        color: u32,
        incoming: usize,
        outgoing: usize,
    },
    #[error("the graph has sources (vertex `{0}` receives no edge of some color)")]
    NoSources(String),
    #[error("the graph has sinks (vertex `{0}` emits no edge of some color)")]
    NoSinks(String),
    #[error("formula not applicable: {0}")]
    Inapplicable(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
