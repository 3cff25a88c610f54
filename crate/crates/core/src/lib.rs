//! Exact constructions around quadratic spaces and their orthosets.
//!
//! The library implements arithmetic in real quadratic extension towers over
//! the rationals (the constructive fragment of the Hilbert field), the
//! rational quaternion ⋆-sfield, standard Hermitian spaces `F^n` over either
//! scalar kind, the associated projective orthosets, orthogonal-map witnesses
//! for transitivity and line symmetry, and field homomorphisms between towers
//! together with the orthoset embeddings they induce.
//!
//! All arithmetic is exact: scalars are big rationals throughout and every
//! verification the library reports is a zero-tolerance identity check.

pub mod embeddings;
pub mod exact_fields;
pub mod inner_spaces;
pub mod orthosets;
pub mod sampling;
pub mod star_sfields;
pub mod symmetries;

use num::BigRational;

/// Exact rational scalar used for all coefficients.
pub type Rat = BigRational;

/// Errors shared across the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands lie in incompatible towers; merge towers first")]
    TowerMismatch,
    #[error("tower depth limit {limit} exceeded")]
    DepthLimit { limit: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero vector has no direction")]
    ZeroVector,
    #[error("input vectors are linearly dependent")]
    DependentVectors,
    #[error("the two points coincide")]
    EqualPoints,
    #[error("point does not lie on the given line")]
    PointNotOnLine,
    #[error("operation requires a commutative scalar kind")]
    NonCommutative,
    #[error("finite orthoset too large: {size} points exceeds the cap of {cap}")]
    SizeLimit { size: usize, cap: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("element is not a square: {0}")]
    NotASquare(String),
    #[error("square root of a negative element")]
    NegativeSquareRoot,
    #[error("candidate root does not square to the prescribed value")]
    RootImageMismatch,
    #[error("tower generator lacks hypot provenance")]
    MissingProvenance,
    #[error("constructed map failed verification: {0}")]
    WitnessInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
