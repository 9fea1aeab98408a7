//! Exact computations on bivariate Horn hypergeometric systems.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: rationals, univariate polynomials over Q, dense rational matrices.
//! - [`puiseux`]: sparse bivariate polynomials with rational exponents and the
//!   Euler (θ) operator calculus acting on them.
//! - [`horn`]: the system model (operators, pairing into ±Â, Ore–Sato polygon,
//!   holonomic rank).
//! - [`solver`]: candidate supports, the parallelogram closed form and an exact
//!   recurrence solver with operator-application certificates.
//! - [`complexity`]: upper bounds on analytic complexity and the Δ₁ test.
//! - [`json`], [`plot`], [`fixtures`]: file formats, SVG/ASCII rendering and the
//!   bundled example systems.
//!
//! All arithmetic is exact; there is no floating point anywhere in the crate.

pub mod complexity;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod horn;
pub mod json;
pub mod plot;
pub mod puiseux;
pub mod solver;

pub use error::{Error, Result};
pub use exact::{Rational, RationalMatrix, UniPoly};
pub use horn::{HornSystem, Variable};
pub use puiseux::{AffineForm, Direction, ExponentPoint, PuiseuxPoly, Support};
