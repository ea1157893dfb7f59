use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid character {ch:?} in word")]
    InvalidLetter { ch: char },

    #[error("generator index {index} exceeds rank {rank}")]
    RankExceeded { index: usize, rank: usize },

    #[error("rank {0} is outside the supported range 1..=26")]
    UnsupportedRank(usize),

    #[error("tuple of {found} words cannot be a basis of rank {rank}")]
    WrongArity { found: usize, rank: usize },

    #[error("not a basis: {reason}")]
    NotABasis { reason: String },

    #[error("the trivial loop has no length")]
    TrivialLoop,

    #[error("fold would produce an empty label on edge {edge}")]
    DegenerateFold { edge: usize },

    #[error("fold move needs two distinct edges, got {0} twice")]
    SameEdge(usize),

    #[error("edge {edge} out of range for a rose with {edges} edges")]
    EdgeOutOfRange { edge: usize, edges: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no edges or vertices")]
    EmptyGraph,

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("trace of {word} through the rewriter did not close at the basepoint")]
    RewriterCorrupt { word: String },

    #[error("window too small: slice segment touches the scan boundary at k = {k}")]
    UnstableWindow { k: i64 },

    #[error("slice is not a contiguous segment along the axis")]
    NonConvexSlice,

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("loop enumeration cap {cap} reached without a primitive loop")]
    LengthCapExceeded { cap: usize },

    #[error("free factor must have rank 2, got {0}")]
    FactorRank(usize),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
