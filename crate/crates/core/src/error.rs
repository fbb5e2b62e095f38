use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("index {0} is not a group label (expected 0..=7)")]
    InvalidIndex(usize),

    #[error("component mask is not closed: [g{0}, g{1}] lands in g{2} outside the mask")]
    MaskNotClosed(usize, usize, usize),

    #[error("element has a nonzero coefficient at g{0}, outside the component mask")]
    OutsideMask(usize),

    #[error("coefficient subspace is not closed under σ_{{{0},{1}}}")]
    NotTwistClosed(usize, usize),

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,

    #[error("reflection vector must be nonzero")]
    ZeroVector,

    #[error("triple ({0}, {1}, {2}) does not generate the group")]
    DegenerateTriple(usize, usize, usize),

    #[error("contraction parameters must be nonzero")]
    ZeroParameter,

    #[error("map is not an automorphism of the algebra")]
    NotAutomorphism,

    #[error("map is not a graded contraction: {0}")]
    InvalidContraction(String),

    #[error("unsupported algebra for this operation: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
