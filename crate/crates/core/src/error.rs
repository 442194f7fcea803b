use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid weight {0:?}")]
    InvalidWeight(String),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("not a partition: {0}")]
    InvalidPartition(String),
    #[error("input contains a cycle")]
    Cycle,
    #[error("edge set is not a matching: vertex {0} is covered twice")]
    NotAMatching(usize),
    #[error("({0}, {1}) is not a positive edge of the graph")]
    NotPositiveEdge(usize, usize),
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    ImproperColoring(usize, usize),
    #[error("instance has {n} vertices, exact enumeration is limited to {limit}; use an approximate solver")]
    TooLarge { n: usize, limit: usize },
    #[error("decomposition width {width} needs {states} partition states per bag, limit is {limit}")]
    WidthTooLarge { width: usize, states: u128, limit: u128 },
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
    #[error("weights too large for exact integer rescaling")]
    Overflow,
}

impl Error {
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvalidWeight(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
