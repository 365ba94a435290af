//! Lieb-Thirring-type spectral bounds for the Dirac operator on the n-sphere.
//!
//! The crate evaluates the closed-form bound constants at extended precision,
//! re-derives them independently through exact spectral counting, piecewise
//! integration and one-dimensional ratio minimization, and checks the
//! underlying inequalities exactly on filled-shell families.

pub mod constants;
pub mod error;
pub mod precision;
pub mod spectrum;

pub use error::{Error, Result};
pub use precision::Precision;
