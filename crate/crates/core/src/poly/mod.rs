//! Exact sparse multivariate polynomials.

mod field;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use field::{Field, FieldDescriptor, PrimeField, Rationals};
pub use monomial::{Exponent, Monomial};
pub use order::{monomial_compare, MonomialOrder};
pub use polynomial::{multidegree_of, poly_arith, ArithOp, Homogeneity, Multidegree, Polynomial};
pub use ring::PolynomialRing;

pub(crate) use polynomial::merge_scaled;
