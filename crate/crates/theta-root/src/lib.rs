//! Exact computation of the leading root of the partial theta function,
//! together with the combinatorial models that explain its coefficients.
//!
//! The partial theta function is the bivariate series
//! `Theta_0(x, q) = sum_{n >= 0} x^n q^(n(n-1)/2)`. Viewed as a series in
//! `x` over formal power series in `q`, it has a unique root of the form
//! `x = -xi(q)` with `xi(0) = 1`; the coefficients of
//!
//! ```text
//! xi(q) = 1 + q + 2q^2 + 4q^3 + 9q^4 + 21q^5 + 52q^6 + ...
//! ```
//!
//! are strictly positive integers. This crate computes `xi(q)` exactly to
//! any truncation order by three independent methods, computes the
//! refinements that track tree vertex counts, and validates everything
//! against exhaustive combinatorial enumeration:
//!
//! - [`theta`] — the root itself ([`xi_via_theta`], [`xi_fix1`],
//!   [`xi_fix2`]), the species maps `F` (stack polyominoes by rise) and
//!   `F~` (Durfee-constrained Ferrers diagrams by width), the refinements
//!   `A(t, q)`, `A~(t, q)` and the level-mixed `A_sigma(t, q)`, and the two
//!   product-sum expansions of `Theta_0`.
//! - [`series`] — exact truncated power series over arbitrary-precision
//!   integers ([`QSeries`]), over integer polynomials in `t`
//!   ([`TQSeries`]), and bivariate in `x` and `q` ([`XQSeries`]).
//! - [`polyomino`] — exhaustive enumeration of stack polyominoes and
//!   Ferrers diagrams, plus their closed-form generating functions, each
//!   checking the other.
//! - [`tree`] — exhaustive enumeration of enriched plane rooted trees whose
//!   vertex decorations are polyominoes sized by out-degree, the ground
//!   truth behind every series above.
//! - [`asymptotics`] — growth-rate estimation for the coefficients of
//!   `xi(q)` under the square-root-singularity model.
//! - [`verify`] — the cross-check suite wired into the CLI.
//!
//! Every computation is exact integer arithmetic; nothing is floating
//! point except the final readout of the growth-rate estimator.
//!
//! # Quick start
//!
//! ```
//! use theta_root::theta::{xi_via_theta, xi_fix1};
//!
//! let xi = xi_via_theta(9);
//! assert_eq!(xi, theta_root::QSeries::from_ints(&[1, 1, 2, 4, 9, 21, 52, 133, 351, 948]));
//! assert_eq!(xi, xi_fix1(9));
//! ```
//!
//! The `examples/` directory exercises each capability end to end; the
//! `theta-root` binary exposes the same computations as subcommands.

pub mod asymptotics;
pub mod polyomino;
pub mod series;
pub mod theta;
pub mod tree;
pub mod verify;

pub use series::ring::Ring;
pub use series::tpoly::TPoly;
pub use series::xq::XQSeries;
pub use series::{QSeries, Series, TQSeries};

/// Errors surfaced by the fallible operations of this crate.
///
/// Everything else either cannot fail or treats failure as a violated
/// internal invariant and panics.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Reciprocal of a series whose constant term is not `1` or `-1`.
    #[error("non-invertible series: constant term must be 1 or -1")]
    NonInvertibleSeries,
    /// Infinite Pochhammer product of a series with nonzero constant term.
    #[error("divergent infinite product: argument must have zero constant term")]
    DivergentInfiniteProduct,
    /// A level-species word must contain at least one letter.
    #[error("empty sigma word")]
    EmptySigmaWord,
    /// The monotonicity injection is defined only on trees whose every
    /// decoration is a stack polyomino or empty.
    #[error("injection is defined only on stack-enriched trees")]
    InjectionNeedsStackTree,
    /// Growth estimation asked for coefficients beyond the series order,
    /// or for a window too short to extrapolate.
    #[error("insufficient coefficients: {0}")]
    InsufficientCoefficients(String),
    /// Growth estimation found data incompatible with the model.
    #[error("model violated: {0}")]
    ModelViolated(String),
    /// A column-height sequence that is not unimodal.
    #[error("invalid stack polyomino: heights must be positive and unimodal")]
    InvalidStackHeights,
    /// A row-length sequence that is not weakly decreasing and positive.
    #[error("invalid Ferrers diagram: rows must be positive and weakly decreasing")]
    InvalidFerrersRows,
    /// A tree whose decoration size disagrees with its child count, or a
    /// Ferrers decoration without the Durfee condition.
    #[error("invalid enriched tree: {0}")]
    InvalidTree(String),
    /// Malformed JSON for a series.
    #[error("invalid series JSON: {0}")]
    InvalidSeriesJson(String),
    /// Malformed canonical tree encoding.
    #[error("invalid tree encoding: {0}")]
    InvalidTreeEncoding(String),
}
