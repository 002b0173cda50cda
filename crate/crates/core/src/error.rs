use alloc::string::String;

use crate::rootsys::Letter;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no simple Lie algebra of type {letter}{rank}")]
    InvalidType { letter: Letter, rank: usize },

    #[error("cannot parse Dynkin type {0:?}: expected a letter A-G followed by a rank")]
    ParseType(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vector {0} is not a positive root")]
    NotARoot(String),

    #[error("painted node set is empty; only non-compact real forms are supported")]
    EmptyPainted,

    #[error("node {index} is out of range for rank {rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("phi must be dominant (coordinate {index} is negative)")]
    NotDominant { index: usize },

    #[error("phi must be positive on every painted node (node {index} is zero)")]
    SupportViolation { index: usize },

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}
