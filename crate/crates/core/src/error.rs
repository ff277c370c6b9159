use thiserror::Error;

/// Errors produced by the group engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("element {0} does not belong to the group")]
    NotInGroup(String),
    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
