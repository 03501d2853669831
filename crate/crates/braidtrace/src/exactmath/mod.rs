//! Exact arithmetic substrate: rationals, q-integers, dense matrices and
//! polynomials over the rationals.
//!
//! Nothing in this module (or anywhere downstream) rounds: all arithmetic is
//! over arbitrary-precision rationals and all comparisons are exact.

mod matrix;
mod poly;
mod scalar;

pub use matrix::Matrix;
pub use poly::{charpoly, minpoly_given_candidates, Poly};
pub use scalar::{QContext, Rat};
