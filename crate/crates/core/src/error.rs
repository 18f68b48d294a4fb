use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("sigma must be positive, got {0}")]
    InvalidSigma(f64),
    #[error("threshold must be in (0, 1], got {0}")]
    InvalidThreshold(f64),
    #[error("read {0} has non-positive length")]
    InvalidReadLength(u64),
    #[error("reads must be sorted by left endpoint (ties by id); violated at index {0}")]
    UnsortedReads(usize),
    #[error("duplicate read id {0}")]
    DuplicateReadId(u64),
    #[error("clustering is not a partition of the {n} vertices: {reason}")]
    NotAPartition { n: usize, reason: String },
    #[error("size array malformed: size[{index}] = {size} exceeds the prefix length {index}")]
    MalformedSizeArray { index: usize, size: usize },
    #[error("exhaustive search is limited to {limit} vertices, got {n}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("active clique set exceeded the cap of {cap}; input is too far from an interval graph")]
    ActiveCliqueCap { cap: usize },
    #[error("simulated events must be non-overlapping and inside the genome: {0}")]
    InvalidEvents(String),
    #[error("expected {expected} p-values, got {got}")]
    PvalueCount { expected: usize, got: usize },
    #[error("p-value {0} outside [0, 1]")]
    InvalidPvalue(f64),
    #[error("{0}")]
    InvalidInput(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
