//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced while constructing or checking braided-trace data.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The scalar context rejected q (zero, a root of unity inside the
    /// genericity bound, or +-1 without the classical flag).
    #[error("genericity violation: {0}")]
    GenericityViolation(String),

    /// A structural invariant of a Hecke symmetry failed on construction.
    #[error("validation failure: {0}")]
    ValidationFailure(String),

    /// The reshuffle of R needed for the column inverse Q is singular.
    #[error("the column reshuffle of R is singular")]
    SingularReshuffle,

    /// R does not move the associated determinant by a single scalar.
    #[error("not admissible: {0}")]
    NotAdmissible(String),

    /// No antisymmetric power collapses to dimension one within the bound.
    #[error("symmetry is not even (no rank found up to degree {0})")]
    NotEven(usize),

    /// The tensor extension of B/C does not restrict to the symmetric power.
    #[error("trace-weight extension incompatible at level {0}")]
    ExtensionIncompatible(usize),

    /// A representation left a nonzero relation residual.
    #[error("nonzero relation residual: {0}")]
    ResidualNonzero(String),

    /// No value of hbar makes the sl relations vanish.
    #[error("hbar fit failure: {0}")]
    FitFailure(String),

    /// Right representations through the bilinear form need rank 2.
    #[error("operation requires rank 2, symmetry has rank {0}")]
    RankNot2(usize),

    /// The Gram matrix of the induced pairing is singular.
    #[error("singular Gram matrix at level {0}")]
    SingularGram(usize),

    /// A central element did not evaluate to a scalar matrix.
    #[error("central element evaluates to a non-scalar matrix: {0}")]
    NonScalar(String),

    /// Mixed gl/sl data where a single flavor is required.
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),

    /// Root list contains repeated values; idempotents are undefined.
    #[error("repeated roots: {0}")]
    RepeatedRoots(String),

    /// Even the full candidate product does not annihilate the matrix.
    #[error("annihilation failure: {0}")]
    AnnihilationFailure(String),

    /// Vandermonde system for multiplicities is singular.
    #[error("singular Vandermonde system (repeated roots)")]
    VandermondeSingular,

    /// The requested square root is not rational.
    #[error("irrational square root of {0}")]
    IrrationalSqrt(String),

    /// Generic dimension/shape mismatch in matrix work.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An asserted pipeline identity failed; carries a diagnostic.
    #[error("assertion failure: {0}")]
    AssertionFailure(String),
}
