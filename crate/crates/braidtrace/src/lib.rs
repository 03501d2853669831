//! Exact-arithmetic toolkit for Hecke symmetries and braided trace data.
//!
//! The crate builds Yang-Baxter braidings of Hecke type together with all the
//! trace machinery they induce (the column-inverse `Q`, the weight matrices
//! `B`/`C`, q-symmetrizers, categorical dimensions), constructs left and right
//! representations of the modified reflection equation algebra, and verifies
//! the Cayley-Hamilton identities, spectral idempotents and the braided
//! Chern-Connes q-index `Ind = [m+k-2i+1]_q` that come out of that data.
//!
//! Everything is computed over arbitrary-precision rationals; every check in
//! the crate is an exact identity, never a floating-point comparison.
//!
//! Module map:
//! - [`exactmath`]: rationals, q-integers, dense exact matrices, polynomials
//! - [`hecke`]: Hecke symmetries and their derived data (`Q`, `B`, `C`, rank)
//! - [`schur`]: q-(anti)symmetrizers, bases, trace weights, q-dimensions
//! - [`ncalg`]: normal-form engine for the rank-2 reflection-equation algebra
//! - [`reps`]: representations built from the truncated coproduct
//! - [`casimir`]: the braided Casimir operators and weighted traces
//! - [`index`]: root formulas, idempotents, multiplicities and the q-index
//! - [`report`]: machine-readable check reports for the CLI

pub mod casimir;
pub mod error;
pub mod exactmath;
pub mod hecke;
pub mod index;
pub mod ncalg;
pub mod reps;
pub mod report;
pub mod schur;

pub use error::Error;
pub use exactmath::{Matrix, Poly, QContext, Rat};
pub use hecke::HeckeSymmetry;
pub use schur::SymmetrizerTower;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
