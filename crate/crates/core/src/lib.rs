//! Numerics for holomorphic maps of the radial form `F(x) = f(x) x` on the
//! unit ball of a finite-dimensional complex `l^p` space.
//!
//! Every ball-level question (univalence, starlikeness, quasi-convexity of
//! type B, coefficient and growth bounds, Bloch estimates) is reduced to the
//! one-variable slice functions `f_u(z) = z f(z u)` for boundary directions
//! `u`. The crate is `no_std` and only needs `alloc`.
//!
//! Module map:
//!
//! * [`series`]: truncated one-variable power series.
//! * [`poly`], [`rational`]: exact univariate polynomials (with a
//!   companion-matrix root finder) and rational functions, the exact carriers
//!   of slice functions.
//! * [`norm`]: `l^p` norms, support functionals and sphere sampling.
//! * [`multipoly`]: sparse multivariate polynomials and polynomial maps.
//! * [`radial`]: radial maps, their slices, derivatives and constructors.
//! * [`criteria`]: univalence / starlike / convexity deciders.
//! * [`bounds`]: verifiers for the sharp coefficient, growth, distortion,
//!   Fekete-Szego and Bloch inequalities.
//! * [`bohr`]: Bohr-Rogosinski radii and the corresponding inequality check.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bohr;
pub mod bounds;
pub mod criteria;
mod error;
mod linalg;
pub mod multipoly;
pub mod norm;
pub mod poly;
pub mod radial;
pub mod rational;
pub mod series;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex<f64>;

pub use bohr::{RadiusQuery, RadiusResult, RadiusVariant, SchwarzOrder};
pub use bounds::{BoundReport, Sense};
pub use criteria::{CriterionConfig, CriterionKind, CriterionReport, Verdict, Witness};
pub use multipoly::{MultiPoly, PolyMap};
pub use norm::{NormModel, SupportFunctional, Vector};
pub use poly::Polynomial;
pub use radial::{RadialMap, ScalarField, SchwarzPower};
pub use rational::Rational;
pub use series::{SeriesOp, TruncatedSeries};

/// Shorthand for a real-valued complex number.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
