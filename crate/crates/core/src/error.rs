use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid pair ({x},{y}): a pair requires 1 <= x <= y")]
    InvalidPair { x: usize, y: usize },
    #[error("pair ({x},{y}) exceeds arity {arity}")]
    PairOutOfRange { x: usize, y: usize, arity: usize },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("arities differ: {left} vs {right}")]
    ArityDiffers { left: usize, right: usize },
    #[error("composition position {position} out of range 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("expected {expected} arguments, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("vector length {len} out of range 1..={max}")]
    VectorLength { len: usize, max: usize },
    #[error("vector of length {len} does not fit a set of arity {arity}")]
    VectorArityMismatch { arity: usize, len: usize },
    #[error("intervals of a free subset must be pairwise disjoint: ({x1},{y1}) meets ({x2},{y2})")]
    OverlappingPairs {
        x1: usize,
        y1: usize,
        x2: usize,
        y2: usize,
    },
    #[error("symbol must be a non-empty string without whitespace, got {0:?}")]
    InvalidSymbol(String),
    #[error("relation on {{1,...,{size}}} is missing diagonal pair ({x},{x})")]
    MissingDiagonal { size: usize, x: usize },
    #[error("relation pair ({x},{y}) exceeds ground set {{1,...,{size}}}")]
    RelationPairOutOfRange { x: usize, y: usize, size: usize },
    #[error("relation ground set must be non-empty")]
    EmptyGroundSet,
    #[error("arity {arity} outside supported range 1..={max}")]
    UnsupportedArity { arity: usize, max: usize },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("star operator cannot be compiled into a single multitilde")]
    StarNotSupported,
    #[error("leaf language must be a single letter or the empty language")]
    InvalidLeaf,
    #[error("tree has {found} leaves, expected {expected}")]
    LeafCountMismatch { expected: usize, found: usize },
    #[error("leaf index {index} out of range 1..={max}")]
    LeafIndexOutOfRange { index: usize, max: usize },
    #[error("worker count must be at least 1")]
    ZeroWorkers,
}

pub type Result<T> = std::result::Result<T, Error>;
