use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank ell must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("root vector has a negative coefficient: {0:?}")]
    NegativeRoot(Vec<i64>),
    #[error("index {index} out of range for e = {e}")]
    IndexOutOfRange { index: usize, e: usize },
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("expected {expected} coefficients, got {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("target weight is not in the equivalence class of the base weight")]
    NoSolution,
    #[error("move ({i},{j}) needs more multiplicity at those indices")]
    InsufficientMultiplicity { i: usize, j: usize },
    #[error("level {k} is too small; this operation needs level at least {min}")]
    LevelTooSmall { k: i64, min: i64 },
    #[error("vertex not found in quiver")]
    VertexNotFound,
    #[error("dominance procedure did not finish within {cap} reflections")]
    IterationCapExceeded { cap: usize },
    #[error("invalid field parameters: {0}")]
    InvalidFieldParams(String),
    #[error("node ({component},{row},{col}) is not removable")]
    NodeNotRemovable { component: usize, row: usize, col: usize },
    #[error("residue sequence {0:?} does not have the requested content")]
    ContentMismatch(Vec<usize>),
    #[error("size {size} exceeds the enumeration limit {limit}")]
    SizeLimit { size: i64, limit: i64 },
    #[error("invalid Brauer graph: {0}")]
    InvalidGraph(String),
    #[error("unsupported Brauer graph: {0}")]
    UnsupportedGraph(String),
    #[error("derived equivalence test needs at least two edges")]
    LocalAlgebraUnsupported,
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("decomposition search exceeded {limit} nodes")]
    SearchSpaceExceeded { limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
