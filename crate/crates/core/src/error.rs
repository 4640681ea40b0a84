use thiserror::Error;

/// Errors produced by the model's operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree {0} is outside the supported range 1..={max}", max = crate::perm::MAX_DEGREE)]
    UnsupportedDegree(usize),

    #[error("length {j} is out of range for degree {n} (must be at most {})", n / 2)]
    LengthOutOfRange { n: usize, j: usize },

    #[error("not a permutation of 1..={n}: {detail}")]
    InvalidPermutation { n: usize, detail: String },

    #[error("permutation does not square to the identity")]
    NotAnInvolution,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("block {block:?} is not a connected component of the pair")]
    BlockNotConnected { block: Vec<usize> },

    #[error("multiplicity of {lambda} in V_{j} is not integral ({numerator}/{denominator})")]
    NonIntegralMultiplicity {
        lambda: String,
        j: usize,
        numerator: i128,
        denominator: i128,
    },
}

pub type Result<T, E = ModelError> = std::result::Result<T, E>;

pub(crate) fn check_degree(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(ModelError::DegreeMismatch { left, right })
    }
}
