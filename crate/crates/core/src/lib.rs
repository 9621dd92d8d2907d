pub mod constructions;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod koszulness;
pub mod linalg;
pub mod resolution;
pub mod poly;

#[cfg(doctest)]
mod book;

pub use error::{Error, PolyError, Result};
pub use groebner::{GroebnerBasis, Ideal, QuotientRing};
pub use poly::{Field, Monomial, MonomialOrder, Polynomial, PolynomialRing, PrimeField, Rationals};
