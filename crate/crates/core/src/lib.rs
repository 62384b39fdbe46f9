//! Computational toolkit for the q-operation on finitely presented
//! commutative algebras `R = k[x_1..x_n]/I` over prime fields.
//!
//! The crate is layered bottom-up:
//!
//! - [`field`] and [`poly`]: exact arithmetic in `GF(p)[x_1..x_n]`, monomial
//!   orders and the polynomial text syntax.
//! - [`groebner`]: Buchberger's algorithm and the ideal operations built on it
//!   (membership, elimination, intersection, colon, saturation, dimension).
//! - [`monomial_ideal`]: combinatorics of monomial ideals (irreducible
//!   decomposition, associated and minimal primes, radicals).
//! - [`qring`]: quotient rings, dense and semiregular ideals, associated
//!   primes, maximal q-ideals, heights, q-Krull dimension, q-closure and the
//!   content-ideal checks over `R[t]`.
//! - [`verify`]: seeded corpora of rings and the property table run over them.

pub mod error;
pub mod field;
pub mod groebner;
pub mod monomial_ideal;
pub mod poly;
pub mod qring;
pub mod verify;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use groebner::{DimensionCertificate, PolyIdeal};
pub use monomial_ideal::{MonomialIdeal, MonomialPrime};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial};
pub use qring::{PrimeRep, QAnalysis, QuotientRing, RIdeal};
