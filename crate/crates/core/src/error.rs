use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("{0} is not a recognized unit")]
    NotAUnit(String),

    #[error("matrix is not invertible: determinant {0} is not a recognized unit")]
    NotInvertible(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {index} out of range for size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("invalid letter x_{{{i}{j}}}: indices must differ")]
    DiagonalLetter { i: usize, j: usize },

    #[error("variable {0} is not in the ring")]
    UnknownVariable(String),

    #[error("Laurent variable {0} is not supported here")]
    LaurentVariable(String),

    #[error("substituted value for Laurent variable {0} is not a unit")]
    NonUnitImage(String),

    #[error("{0} does not lie in the source ring of the homomorphism")]
    NotInSource(String),

    #[error("{elem} is not in the ideal {ideal}")]
    NotInIdeal { elem: String, ideal: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("matrix is not nilpotent within {0} steps")]
    NotNilpotentWithin(usize),

    #[error("decomposition is empty: the representative has no s-dependence")]
    EmptyDecomposition,

    #[error("representative has a nonzero s-degree-0 part in I - M")]
    ConstantTerm,

    #[error("verification failed: {0}")]
    Verification(String),
}
