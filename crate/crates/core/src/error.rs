use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Root counting is not defined for the zero polynomial.
    #[error("undefined root count: zero polynomial")]
    UndefinedRootCount,

    /// Division by a rational function that is identically zero.
    #[error("division by identically-zero rational function")]
    DivisionByZero,

    /// The `X_1` family has no degree-0 member.
    #[error("X_1 family starts at degree 1")]
    X1DegreeZero,

    /// A normalization denominator vanished for the supplied parameters.
    #[error("degenerate normalization: {0}")]
    DegenerateNormalization(String),

    /// A polynomial division that must be exact left a nonzero remainder.
    #[error("factorization failure: {0}")]
    FactorizationFailure(String),

    /// Seed or pair indices violate the construction's validity range.
    #[error("invalid indices: {0}")]
    InvalidIndices(String),

    /// The denominator polynomial has a root on (0, oo).
    #[error("singular extension: {0}")]
    SingularExtension(String),

    /// Seed parameters outside the range that keeps the inverse
    /// factorization function nonnormalizable.
    #[error("normalizable inverse risk: outside validity range: {0}")]
    OutsideValidityRange(String),

    /// Malformed numeric or grid parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
