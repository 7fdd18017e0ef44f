use thiserror::Error;

use crate::diagram::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is below the minimum {min} for family {family}")]
    InvalidRank { family: Family, rank: usize, min: usize },

    #[error("invalid painted set: {0}")]
    InvalidDiagram(String),

    #[error("{0}")]
    Parse(String),

    #[error("vector has length {got}, expected {expected}")]
    DimensionError { expected: usize, got: usize },

    #[error("painted position {j} out of range 1..={m}")]
    IndexError { j: usize, m: usize },

    #[error("oracle inconsistency at node {node}: {detail}")]
    OracleInconsistency { node: usize, detail: String },

    #[error("helper sums disagree at painted position {j}: {detail}")]
    HelperInconsistency { j: usize, detail: String },

    #[error("no unique formula branch for painted position {j}: {matched} branches match")]
    AmbiguousBranch { j: usize, matched: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("odd coefficient {value} at node {node}: coefficients are always even")]
    ParityViolation { node: usize, value: String },

    #[error("rank {rank} exceeds the oracle cap {cap}")]
    CapExceeded { rank: usize, cap: usize },

    #[error("integer overflow in exact arithmetic")]
    Overflow,
}
