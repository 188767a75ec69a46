//! # funmean
//!
//! Weighted and logarithmic means of convex functionals, their matrix
//! counterparts, and the duality machinery connecting the two.
//!
//! The operands are proper convex lower semi-continuous functions. Two
//! concrete representations are supported:
//!
//! - [`GridFn`](convex_core::GridFn): a convex function sampled on a uniform
//!   1-D grid over a bounded interval, extended by `+∞` outside. All grid
//!   results are statements about `f + indicator([lo, hi])`, the box-truncated
//!   function, not about `f` on the whole line.
//! - [`QuadraticFn`](convex_core::QuadraticFn) / [`SpdMatrix`](convex_core::SpdMatrix):
//!   the quadratic form `Q_A(x) = ½⟨Ax, x⟩` generated by a symmetric
//!   positive-definite matrix.
//!
//! ## The means
//!
//! | Mean | Functional form | Matrix form |
//! |------|-----------------|-------------|
//! | arithmetic `f ∇_λ g` | `(1−λ)f + λg` | `(1−λ)A + λB` |
//! | harmonic `f !_λ g` | `((1−λ)f* + λg*)*` | `((1−λ)A⁻¹ + λB⁻¹)⁻¹` |
//! | geometric `f ♯_λ g` | `∫ f!_t g dν_λ(t)` | `A^{1/2}(A^{-1/2}BA^{-1/2})^λ A^{1/2}` |
//! | logarithmic `L(f,g)` | `∫₀¹ f♯_t g dt = ∫₀¹ f!_t g dμ(t)` | `A^{1/2}F(A^{-1/2}BA^{-1/2})A^{1/2}`, `F(x)=(x−1)/log x` |
//!
//! Here `ν_λ` is the Gauss–Jacobi-type probability measure with density
//! `(sin πλ / π) t^{λ−1}(1−t)^{−λ}` on `(0,1)` and `μ` is the symmetric
//! probability measure with density `1/(t(1−t)(π² + log²(t/(1−t))))`.
//!
//! The crate also provides the interpolating families `G_s` and `U_s`, the
//! diamond operation `f◇g`, quadrature rules for `ν_λ` and `μ`, and the
//! [`verify`] module: seeded, randomized campaigns that check every
//! inequality and integral identity the library claims, reporting margins
//! in machine-readable form.
//!
//! ## Conventions
//!
//! Functional values live in the extended reals with `+∞` absorbing sums
//! (`a + (+∞) = +∞`, `(+∞) − (+∞) = +∞`, `0·(+∞) = +∞`); see [`extreal`].

use thiserror::Error;

pub mod convex_core;
pub mod extreal;
pub mod fenchel;
pub mod functional_means;
pub mod operator_means;
pub mod quadrature;
pub mod verify;

mod linalg;
mod pl;

pub use convex_core::{GridFn, QuadraticFn, SlopeInterval, SpdMatrix, Subdifferential, SymMatrix};
pub use extreal::ExtReal;
pub use quadrature::QuadRule;
pub use verify::TrialReport;

/// Errors produced by constructors and operations across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("NaN is not a valid extended-real value")]
    NotANumber,

    #[error("scale factor must be nonnegative, got {0}")]
    NegativeScale(f64),

    #[error("scale factor must be strictly positive, got {0}")]
    NonPositiveScale(f64),

    #[error("grid bounds must satisfy lo < hi, got [{lo}, {hi}]")]
    BadGridBounds { lo: f64, hi: f64 },

    #[error("grid needs at least {min} nodes, got {got}")]
    TooFewNodes { min: usize, got: usize },

    #[error("functional is improper: fewer than two finite values")]
    Improper,

    #[error("-∞ values are rejected: operands must stay proper")]
    NegInfValue,

    #[error("finite values must form a contiguous range; gap at node {index}")]
    DomainGap { index: usize },

    #[error("sampled values are not convex: second difference {violation:.3e} at node {index}")]
    NonConvex { index: usize, violation: f64 },

    #[error("effective domains do not intersect")]
    EmptyDomainIntersection,

    #[error("result is improper (no finite values survive)")]
    ImproperResult,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not symmetric: max asymmetry {max_asym:.3e}")]
    NotSymmetric { max_asym: f64 },

    #[error("matrix is not positive definite: min eigenvalue {min_eig:.3e}")]
    NotPositiveDefinite { min_eig: f64 },

    #[error("matrix too ill-conditioned: condition number {cond:.3e}")]
    IllConditioned { cond: f64 },

    #[error("eigensolver failed to converge after {sweeps} sweeps")]
    EigenNoConvergence { sweeps: usize },

    #[error("parameter {name} = {value} outside its admissible range {range}")]
    ParamRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("node count {got} outside [{min}, {max}]")]
    NodeCount { got: usize, min: usize, max: usize },

    #[error("unknown verification suite '{0}'")]
    UnknownSuite(String),

    #[error("matrix entry is not finite")]
    NonFiniteEntry,
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
