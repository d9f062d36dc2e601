//! Sparse multivariate polynomials over the rationals.

mod monomial;
mod polynomial;
mod ring;
mod text;
pub mod univariate;

pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::{same_ring, Ring, VariableRegistry};
pub use text::{format_polynomial, parse_polynomial, parse_polynomial_list};
pub use univariate::{UniPoly, UniRationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("invalid variable registry: {0}")]
    Registry(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("expected {expected} images, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("exponent overflow")]
    Overflow,
}
