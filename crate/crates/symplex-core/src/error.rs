use thiserror::Error;

/// Crate-wide error type. Variants carry a short human-readable context
/// string; callers that need structured data (for example failure
/// reports from the lab) use the report types instead of errors.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("mixed ring operands: {0}")]
    MixedRing(String),

    #[error("exponent not in monoid: {0}")]
    NotInMonoid(String),

    #[error("membership search bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("no euclidean structure: {0}")]
    NotEuclidean(String),

    #[error("incomplete assignment: {0}")]
    IncompleteAssignment(String),

    #[error("modulus {0} is not prime (or out of range)")]
    NonPrimeModulus(u64),

    #[error("ambient rank {0} exceeds the supported maximum of 6")]
    RankTooLarge(usize),

    #[error("not a subcone: {0}")]
    NotSubcone(String),

    #[error("cone too small to split: {0}")]
    TooSmall(String),

    #[error("bad generator indices: {0}")]
    BadIndices(String),

    #[error("not a unit: {0}")]
    NotUnit(String),

    #[error("not a monomial: {0}")]
    NotMonomial(String),

    #[error("sign convention fault: {0}")]
    SignConventionFault(String),

    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),

    #[error("unknown lemma id: {0}")]
    UnknownLemmaId(String),

    #[error("matrix is not symplectic: {0}")]
    NotSymplectic(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("base ring is not a field: {0}")]
    NotAField(String),

    #[error("missing scaling element: {0}")]
    MissingScale(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
