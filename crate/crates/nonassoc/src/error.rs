//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("no root of unity of order {n} in F_{p} ({n} does not divide p-1)")]
    NoRootOfUnity { n: usize, p: u64 },

    #[error("{0} is not a valid prime field characteristic (need a prime p >= 5)")]
    BadCharacteristic(u64),

    #[error("invalid tolerance settings: {0}")]
    BadTolerance(String),

    #[error("scalars belong to different fields")]
    FieldMismatch,

    #[error("elements belong to different algebras ({0})")]
    AlgebraMismatch(String),

    #[error("structure tensor is not commutative at (i={i}, j={j}, k={k})")]
    NotCommutative { i: usize, j: usize, k: usize },

    #[error("operation requires a complex field, got a prime field")]
    PrimeFieldUnsupported,

    #[error("operation requires a prime field, got the complex field")]
    ComplexFieldUnsupported,

    #[error("zero input is not allowed here")]
    ZeroInput,

    #[error("span is not an ideal: {witness}")]
    NotAnIdeal { witness: String },

    #[error("search space p^n = {size} exceeds the brute-force cap {cap}")]
    SearchSpaceTooLarge { size: u128, cap: u128 },

    #[error("idempotent set is not complete; cannot certify")]
    IncompleteSet,

    #[error("char poly vanishes at 1/2 for some idempotent; syzygy undefined")]
    HalfEigenvalue,

    #[error("polynomial map degree {deg} exceeds the allowed maximum {max}")]
    DegreeTooHigh { deg: usize, max: usize },

    #[error("element is not an idempotent (residual {residual:.3e})")]
    NotAnIdempotent { residual: f64 },

    #[error("idempotent does not have a simple spectrum of n-th roots of unity")]
    NotSimpleSpectrum,

    #[error("algebra is not reduced: an idempotent has a singular multiplication operator")]
    NotReduced,

    #[error("projection has mass {leak:.3e} outside the target eigenspace")]
    ProjectionLeakage { leak: f64 },

    #[error("algebra is not medial generic isospectral: {0}")]
    NotMedialIsospectral(String),

    #[error("algebra is not generic isospectral: {0}")]
    NotIsospectral(String),

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("monomial value is not proportional to the principal power of equal degree")]
    NotProportional,

    #[error("multiplication operator of the idempotent is singular")]
    SingularLc,

    #[error("isotope fails associativity on basis triples (residual {residual:.3e}); input is not medial")]
    AssociativityFailed { residual: f64 },

    #[error("table is not an idempotent medial commutative quasigroup: {0}")]
    NotIMCQuasigroup(String),

    #[error("product of idempotents {i} and {j} escapes the enumerated set")]
    ProductEscapes { i: usize, j: usize },

    #[error("boxplus operation leaves the idempotent set at pair ({i}, {j})")]
    ClosureFailure { i: usize, j: usize },

    #[error("boxplus group is not cyclic; no generator exists")]
    NotCyclic,

    #[error("Z_N quasigroup requires odd N, got {0}")]
    EvenOrder(u64),

    #[error("zeta^d != 1: zeta is not a d-th root of unity")]
    NotARoot,

    #[error("system is singular; cannot solve")]
    SingularMatrix,

    #[error("{0}")]
    Json(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
