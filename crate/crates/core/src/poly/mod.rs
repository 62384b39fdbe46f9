//! Exact multivariate polynomial arithmetic over prime fields.

mod monomial;
mod order;
pub mod parse;
mod polynomial;

pub use monomial::{Monomial, MAX_EXPONENT, MAX_VARS};
pub use order::MonomialOrder;
pub use polynomial::{PolyRing, Polynomial, Term};
