use std::fmt;

use super::ideal::{GroebnerBasis, Ideal};
use super::ops;
use crate::error::{Error, PolyError, Result};
use crate::poly::{Field, Monomial, Polynomial, PolynomialRing, Rationals};

/// A graded quotient `R = S/I`. Arithmetic in `R` is reduction in `S`
/// modulo the cached Groebner basis of `I` (under the ambient order).
///
/// Ideals of `R` are represented by their preimages in `S`: the ideal
/// generated by the given lifts together with `I`.
#[derive(Clone, Debug)]
pub struct QuotientRing<K: Field = Rationals> {
    ambient: PolynomialRing<K>,
    ideal: Ideal<K>,
    gb: GroebnerBasis<K>,
}

impl<K: Field> QuotientRing<K> {
    /// Fails if the ideal is not homogeneous, or contains a nonzero element
    /// of degree at most one (rings must be standard graded algebras
    /// presented without linear relations).
    pub fn new(ideal: Ideal<K>) -> Result<Self> {
        ideal.require_homogeneous()?;
        let gb = ideal.groebner_basis();
        if let Some(low) = gb
            .elements()
            .iter()
            .filter_map(Polynomial::total_degree)
            .find(|&d| d <= 1)
        {
            return Err(Error::LowDegreeElement(low as i64));
        }
        Ok(QuotientRing {
            ambient: ideal.ring().clone(),
            ideal,
            gb,
        })
    }

    /// The ambient polynomial ring itself, as a quotient by zero.
    pub fn polynomial_ring(ring: &PolynomialRing<K>) -> Self {
        let ideal = Ideal::zero(ring);
        let gb = ideal.groebner_basis();
        QuotientRing {
            ambient: ring.clone(),
            ideal,
            gb,
        }
    }

    /// Convenience: `S/(gens)` for generators given as text.
    pub fn parse(ring: &PolynomialRing<K>, gens: &[&str]) -> Result<Self> {
        Self::new(Ideal::parse(ring, gens)?)
    }

    pub fn ambient(&self) -> &PolynomialRing<K> {
        &self.ambient
    }

    pub fn defining_ideal(&self) -> &Ideal<K> {
        &self.ideal
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<K> {
        &self.gb
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.ideal.is_zero()
    }

    /// Canonical representative of `f` modulo the defining ideal.
    pub fn reduce(&self, f: &Polynomial<K>) -> Polynomial<K> {
        self.gb.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial<K>) -> bool {
        self.reduce(f).is_zero()
    }

    /// Leading monomials of the defining ideal's basis.
    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.gb.leading_monomials()
    }

    /// Standard monomials of standard degree `d` (a K-basis of `R_d`),
    /// sorted decreasingly under the ambient order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let lead = self.initial_monomials();
        let mut out: Vec<Monomial> = monomials_of_degree(self.nvars(), d)
            .into_iter()
            .filter(|m| !lead.iter().any(|l| l.divides(m)))
            .collect();
        out.sort_by(|a, b| self.ambient.compare(b, a));
        out
    }

    /// The ideal of `R` generated by the images of `gens`, as its preimage
    /// in `S`.
    pub fn ideal(&self, gens: Vec<Polynomial<K>>) -> Result<Ideal<K>> {
        Ideal::new(&self.ambient, gens)?.sum(&self.ideal)
    }

    pub fn parse_ideal(&self, gens: &[&str]) -> Result<Ideal<K>> {
        self.ideal(self.ambient.parse_all(gens)?)
    }

    /// `J : I` in `R`, computed as `(J + I_0) : (I + I_0)` in `S`.
    pub fn colon(&self, j: &Ideal<K>, i: &Ideal<K>) -> Result<Ideal<K>> {
        self.check(j)?;
        self.check(i)?;
        let jj = j.sum(&self.ideal)?;
        let nontrivial: Vec<Polynomial<K>> = i
            .gens()
            .iter()
            .filter(|f| !self.is_zero(f))
            .cloned()
            .collect();
        let ii = Ideal::new(&self.ambient, nontrivial)?;
        ops::ideal_colon(&jj, &ii)
    }

    /// Equality of the images of two ideals in `R`.
    pub fn ideal_equal(&self, a: &Ideal<K>, b: &Ideal<K>) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        ops::ideal_equal(&a.sum(&self.ideal)?, &b.sum(&self.ideal)?)
    }

    fn check(&self, i: &Ideal<K>) -> Result<()> {
        if i.ring().same(&self.ambient) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch.into())
        }
    }
}

impl<K: Field> fmt::Display for QuotientRing<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}]",
            self.ambient.field().descriptor(),
            self.ambient.names().join(",")
        )?;
        if !self.ideal.is_zero() {
            write!(f, "/{}", self.ideal)?;
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `n` variables, in lexicographic
/// order of exponent vectors (largest first).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u16; n];
    fill(&mut exps, 0, d, &mut out);
    out
}

fn fill(exps: &mut [u16], i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = left as u16;
        out.push(Monomial::new(exps.iter().copied()));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e as u16;
        fill(exps, i + 1, left - e, out);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_linear_relations() {
        let r = PolynomialRing::rationals(&["x", "y"]).unwrap();
        assert!(matches!(
            QuotientRing::parse(&r, &["x - y"]),
            Err(Error::LowDegreeElement(1))
        ));
        assert!(matches!(
            QuotientRing::parse(&r, &["x + y^2"]),
            Err(Error::Inhomogeneous(_))
        ));
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 2).len(), 0);
        let r = PolynomialRing::rationals(&["x", "y"]).unwrap();
        let q = QuotientRing::parse(&r, &["x*y"]).unwrap();
        assert_eq!(q.standard_monomials(3).len(), 2);
    }
}
