use thiserror::Error;

use crate::multigraph::EdgeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge:?} out of range for a graph with {m} edges")]
    InvalidEdge { edge: EdgeId, m: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("shore must be a nonempty proper subset of the vertices")]
    DegenerateShore,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph on {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("bisubdivision length must be odd and at least 3, got {0}")]
    BadPathLength(usize),
    #[error("not a single ear: {0}")]
    NotSingleEar(String),
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("cycle length must be at least 3, got {0}")]
    BadCycleLength(usize),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("graph6 cannot encode parallel edges")]
    NotSimple,
    #[error(transparent)]
    Parse(#[from] crate::format::ParseError),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
