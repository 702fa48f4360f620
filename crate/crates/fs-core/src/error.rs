//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("{n}! does not fit in 64 bits (maximum is 20!)")]
    FactorialOverflow { n: usize },
    #[error("permutation size {n} exceeds the supported maximum of 20")]
    TooLarge { n: usize },
    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("label {label} appears more than once")]
    DuplicateLabel { label: usize },
    #[error("position {pos} out of range 1..={n}")]
    PositionOutOfRange { pos: usize, n: usize },
    #[error("cannot swap position {pos} with itself")]
    SwapSamePosition { pos: usize },
    #[error("rank {rank} out of bounds for n = {n}")]
    RankOutOfBounds { rank: u64, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {n} exceeds the supported maximum of 20")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range 1..={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("combined vertex count {total} exceeds the supported maximum of 20")]
    UnionTooLarge { total: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family} requires at least {min} vertices, got {n}")]
    TooFewVertices {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error("cycle length must be >= 3, got {c}")]
    CycleTooShort { c: usize },
    #[error("spider signature must be non-empty with positive leg lengths")]
    EmptySignature,
    #[error("leg lengths must be positive")]
    ZeroLeg,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("X has {x_n} vertices but Y has {y_n}; friends-and-strangers instances need equal vertex sets")]
    SizeMismatch { x_n: usize, y_n: usize },
    #[error("instance has no vertices")]
    EmptyInstance,
    #[error("full enumeration of {n}! states exceeds the configured cap of n = {max}")]
    StateSpaceTooLarge { n: usize, max: usize },
    #[error("computation needs an estimated {required} bytes but the limit is {limit}")]
    MemoryLimit { required: u64, limit: u64 },
    #[error("exploration budget exhausted after visiting {visited} states")]
    BudgetExceeded { visited: u64 },
    #[error("full enumeration is capped at n = 12 (ranks must fit in 32 bits); got max_full_n = {max}")]
    CapTooHigh { max: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}
