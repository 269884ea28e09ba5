//! Exact quantum gl(1|1) invariants of oriented framed tangles.
//!
//! The crate is organized bottom-up:
//! - [`scalar`]: exact arithmetic in Z[q,q^-1] and its fraction field;
//! - [`uq`]: a symbolic model of the quantum superalgebra U_q(gl(1|1))
//!   with Hopf operations, the bar involution and the quasi-R-matrix;
//! - [`rep`]: finite-dimensional weight representations, generator
//!   actions with super signs, R-matrices and ribbon operators;
//! - [`tangle`]: Morse-word tangle diagrams and their evaluation to
//!   equivariant maps;
//! - [`invariant`]: closed-link invariants, the cut construction, the
//!   Alexander polynomial and a Burau determinant oracle;
//! - [`batch`]: corpus sweeps, data-parallel when the `parallel`
//!   feature (default) is enabled.

pub mod batch;
pub mod invariant;
pub mod rep;
pub mod scalar;
pub mod tangle;
pub mod uq;

pub use scalar::{quantum_int, LaurentPoly, RationalFunction};
