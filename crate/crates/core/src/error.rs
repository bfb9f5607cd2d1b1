use thiserror::Error;

/// Every failure the library reports. Vertex ids in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed graph6 record: {0}")]
    MalformedGraph6(String),
    #[error("malformed edge list: {0}")]
    MalformedEdgeList(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("graph has {0} vertices, more than the supported maximum")]
    GraphTooLarge(usize),

    #[error("graph is not connected")]
    NotConnected,
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    #[error("vertex {0} appears in more than one cell")]
    Overlap(usize),
    #[error("vertex {0} is not covered by any cell")]
    Uncovered(usize),
    #[error("partition contains an empty cell")]
    EmptyCell,
    #[error("ground sets differ ({0} vs {1} vertices)")]
    GroundSetMismatch(usize, usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a permutation of 1..={0}")]
    NotPermutation(usize),
    #[error("malformed partition text: {0}")]
    MalformedPartition(String),
    #[error("malformed permutation text: {0}")]
    MalformedPermutation(String),

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix has a negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),

    #[error("spectral radii differ: {0} vs {1}")]
    SpectralRadiusMismatch(f64, f64),
    #[error("joint partition is not balanced")]
    NotBalanced,
    #[error("partition is not weight-equitable")]
    NotWeightEquitable,
    #[error("Perron vector is not constant on cell {0}")]
    NuNotCellConstant(usize),

    #[error("graph is not a cograph")]
    NotCograph,
    #[error("malformed cotree: {0}")]
    MalformedCotree(String),
    #[error("no fixed-point-free involutionary automorphism exists")]
    NoSuchAutomorphism,
    #[error("graph has an odd number of vertices ({0})")]
    OddOrder(usize),
    #[error("cell size c must be at least 2, got {0}")]
    BadC(usize),
    #[error("vertex count must be at least 1, got {0}")]
    BadN(usize),
    #[error("{what} of size {n} exceeds the enumeration limit {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },

    #[error("permutation is not an involution")]
    NotInvolution,
    #[error("permutation fixes vertex {0}")]
    HasFixedPoint(usize),
    #[error("partition is not 2-homogeneous")]
    NotTwoHomogeneous,

    #[error("graph admits no 2-homogeneous equitable partition")]
    NoHomogeneousPartition,
    #[error("a seed is required")]
    SeedRequired,
}

pub type Result<T> = std::result::Result<T, Error>;
