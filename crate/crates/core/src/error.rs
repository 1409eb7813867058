use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An exact combinatorial quantity exceeded the integer capacity.
    /// Overflow is always reported, never wrapped or saturated.
    #[error("binomial overflow: C({n}, {k}) exceeds 64-bit capacity")]
    Overflow { n: u64, k: u64 },

    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("rank {rank} out of range for C({n}, {k}) = {size}")]
    RankOutOfRange {
        n: usize,
        k: usize,
        rank: u64,
        size: u64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {delta}")]
    NotSymmetric { i: usize, j: usize, delta: f64 },

    #[error("eigensolver did not converge within {max_iter} iterations (eigenvalue index {index})")]
    NoConvergence { index: usize, max_iter: usize },

    #[error("dense dimension {dim} exceeds size guard {max_dim}")]
    SizeGuard { dim: u64, max_dim: u64 },

    #[error("internal consistency violation: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
