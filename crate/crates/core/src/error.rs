use thiserror::Error;

use crate::planegraph::{EdgeId, VertexId};

/// Errors raised by graph construction, surgery, and the constructive algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inconsistent rotation system: {0}")]
    InconsistentRotation(String),
    #[error("rotation system has genus {0}; a plane embedding is required")]
    NonZeroGenus(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not cubic (vertex {0} has degree {1})")]
    NotCubic(VertexId, usize),
    #[error("edge {0} is a bridge")]
    Bridge(EdgeId),
    #[error("edge {0} lies in a 2-edge-cut")]
    InTwoEdgeCut(EdgeId),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a near-triangulation: {0}")]
    NotNearTriangulation(String),
    #[error("coloring is not valid: {0}")]
    InvalidColoring(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("size bound exceeded: {what} = {value} > {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("planar code: {0}")]
    Format(String),
    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
