//! Sparse inference for Gaussian processes under a hierarchical Vecchia
//! approximation, with extensions to non-Gaussian data (Laplace) and
//! high-dimensional spatio-temporal filtering.
//!
//! The central objects are a lower-triangular [`SparsityPattern`] derived
//! from a recursive domain partition ([`hierarchy`]), fixed-pattern sparse
//! Cholesky kernels ([`sparse`]), posterior inference for Gaussian and
//! exponential-family observations ([`inference`], [`likelihood`]), and
//! Kalman-style filters built on top of them ([`filter`]).
//!
//! With the default `parallel` feature, the data-parallel kernels (pattern
//! inversion, pattern-restricted Gram products, per-particle filter steps)
//! run on rayon; disabling the feature falls back to equivalent sequential
//! loops. The `*_seq` variants of the kernels are always available so the
//! two paths can be compared directly (see `benches/kernels.rs`).

pub mod filter;
pub mod hierarchy;
pub mod inference;
pub mod likelihood;
pub mod mm;
pub mod models;
pub mod oracle;
pub mod pattern;
pub mod score;
pub mod sparse;

pub use hierarchy::{build_hierarchy, conditioning_pattern, maxdist_order, Hierarchy, HierarchyConfig, Location};
pub use oracle::EntryOracle;
pub use pattern::SparsityPattern;
pub use sparse::{SparseLowerTri, SparseSym, SparseUpperTri};

/// Errors surfaced by construction, factorization, and filtering.
///
/// Factorization failures carry a stage label so that a filter step that
/// fails deep inside a Newton loop remains diagnosable.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty location set")]
    EmptyLocations,
    #[error("hierarchy too shallow: leaf set of {size} exceeds cap {cap} in region {region}")]
    HierarchyTooShallow {
        size: usize,
        cap: usize,
        region: String,
    },
    #[error("invalid hierarchy config: {0}")]
    InvalidConfig(String),
    #[error("invalid sparsity pattern: {0}")]
    InvalidPattern(String),
    #[error("{stage}: not positive definite on pattern at row {row}")]
    NotPositiveDefinite { stage: &'static str, row: usize },
    #[error("pattern violation: {0}")]
    PatternViolation(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{context}: non-finite value at index {index}")]
    NonFinite { context: &'static str, index: usize },
    #[error("unsupported observation {value} for {family} likelihood")]
    UnsupportedObservation { family: &'static str, value: f64 },
    #[error("no convergence after {iters} iterations (last relative step {last_step:e})")]
    NoConvergence { iters: usize, last_step: f64 },
    #[error("particle degeneracy: all weights zero or non-finite")]
    ParticleDegeneracy,
    #[error("negative extra diagonal at index {0}")]
    NegativeExtraDiagonal(usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
