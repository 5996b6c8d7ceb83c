//! Numerical verification laboratory for weighted a-priori inequalities of
//! higher-order parabolic and Schrödinger operators.
//!
//! The crate is organized around five layers:
//!
//! * [`polycalc`] — exact symbolic calculus for constant-coefficient
//!   multivariate polynomials and one-dimensional differential operators
//!   with polynomial coefficients.
//! * [`gridops`] — uniform tensor grids, FFT-based spectral differentiation,
//!   quadrature, and conjugated-operator application via exponential
//!   sandwiching.
//! * [`treves`] — numerical verification of the Trèves identity and its
//!   derived inequalities, with empirical constant estimation.
//! * [`symbolcheck`] — symbol-level factorization identities, homogeneous
//!   forms, and ellipticity certification by minimization on the unit sphere.
//! * [`carleman`] — Carleman weight construction, test-function families,
//!   and τ-sweep experiments estimating the empirical constants of the two
//!   main weighted inequalities.
//!
//! All values are immutable after construction and safe to share across
//! threads; the sweep and sphere-scan drivers parallelize with rayon while
//! keeping reports deterministic for a fixed seed.

pub mod carleman;
pub mod error;
pub mod gridops;
pub mod polycalc;
pub mod symbolcheck;
pub mod treves;

pub use error::{CoreError, Result};
