//! Exact scalars: Laurent polynomials over Q and their fraction field.

mod laurent;
mod rational;

pub use laurent::{quantum_int, LaurentPoly};
pub use rational::RationalFunction;

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
}
