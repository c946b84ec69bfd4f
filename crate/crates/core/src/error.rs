use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix has non-integer entries")]
    NonInteger,
    #[error("vectors are linearly dependent")]
    DependentVectors,
    #[error("zero vector has no primitive form")]
    ZeroVector,
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("fan is not simplicial")]
    NotSimplicial,
    #[error("fan is not complete")]
    NotComplete,
    #[error("not a cone of the fan: {0:?}")]
    NotACone(Vec<usize>),
    #[error("operands live on different toric varieties")]
    MixedVarieties,
    #[error("wrong codimension: expected {expected}, found {found}")]
    WrongCodimension { expected: usize, found: usize },
    #[error("no linearly equivalent divisor avoids the given rays")]
    InfeasibleAvoidance,
    #[error("tropical cycle is not pure-dimensional")]
    NonPure,
    #[error("tropical cycle is not balanced at cone {0:?}")]
    Unbalanced(Vec<usize>),
    #[error("polynomial has fewer than two distinct monomials; its tropical hypersurface is empty")]
    EmptyHypersurface,
    #[error("monomial map is not injective on cone {0}")]
    NonInjectiveMap(usize),
    #[error("no generic displacement found after {0} attempts")]
    GenericityFailure(usize),
    #[error("piecewise-linear function is not linear on cone {0}")]
    NotLinearOnCone(usize),
    #[error("matroid has a loop at element {0}")]
    Loop(usize),
    #[error("matroid is not connected")]
    Disconnected,
    #[error("polynomial is not homogeneous for the class group grading")]
    Inhomogeneous,
    #[error("linear system is inconsistent: {0}")]
    Inconsistent(String),
    #[error("unsupported ideal: {0}; supply an explicit tropical cycle instead")]
    UnsupportedIdeal(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
