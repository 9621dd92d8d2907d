use std::fmt;

use super::engine::{buchberger, is_groebner, reduce_full, EngineConfig};
use crate::error::{Error, PolyError, Result};
use crate::poly::{Field, Homogeneity, Monomial, MonomialOrder, Polynomial, PolynomialRing, Rationals};

/// An ideal of a polynomial ring, given by generators.
#[derive(Clone, Debug)]
pub struct Ideal<K: Field = Rationals> {
    ring: PolynomialRing<K>,
    gens: Vec<Polynomial<K>>,
}

impl<K: Field> Ideal<K> {
    /// Zero generators are dropped. All generators must live in `ring`.
    pub fn new(ring: &PolynomialRing<K>, gens: Vec<Polynomial<K>>) -> Result<Self> {
        if gens.iter().any(|g| !g.ring().same(ring)) {
            return Err(PolyError::RingMismatch.into());
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn parse(ring: &PolynomialRing<K>, gens: &[&str]) -> Result<Self> {
        Self::new(ring, ring.parse_all(gens)?)
    }

    pub fn zero(ring: &PolynomialRing<K>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &PolynomialRing<K>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![ring.one()],
        }
    }

    /// The ideal generated by the given monomials.
    pub fn monomial(ring: &PolynomialRing<K>, monos: impl IntoIterator<Item = Monomial>) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: monos.into_iter().map(|m| ring.monomial(m)).collect(),
        }
    }

    /// The ideal generated by the listed variables.
    pub fn of_variables(ring: &PolynomialRing<K>, vars: &[usize]) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vars.iter().map(|&i| ring.var(i)).collect(),
        }
    }

    pub fn ring(&self) -> &PolynomialRing<K> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<K>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Homogeneous with respect to the ring's grading.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    pub(crate) fn require_homogeneous(&self) -> Result<()> {
        match self.gens.iter().find(|g| !g.is_homogeneous()) {
            Some(g) => Err(Error::Inhomogeneous(g.to_string())),
            None => Ok(()),
        }
    }

    /// Reduced Groebner basis under the ring's own order.
    pub fn groebner_basis(&self) -> GroebnerBasis<K> {
        GroebnerBasis::compute(self, self.ring.clone(), None)
    }

    pub fn groebner_basis_with(&self, order: &MonomialOrder) -> Result<GroebnerBasis<K>> {
        reduced_groebner_basis(self, order)
    }

    pub fn contains(&self, f: &Polynomial<K>) -> bool {
        self.groebner_basis().contains(f)
    }

    /// A minimal homogeneous generating set, selected from the given
    /// generators (graded Nakayama).
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial<K>>> {
        self.require_homogeneous()?;
        let mut gens = self.gens.clone();
        sort_by_degree(&mut gens);
        let out = buchberger(&self.ring, &gens, &EngineConfig::default());
        Ok(out.minimal.into_iter().map(|i| gens[i].clone()).collect())
    }

    /// Sum of two ideals of the same ring.
    pub fn sum(&self, other: &Ideal<K>) -> Result<Ideal<K>> {
        if !self.ring.same(&other.ring) {
            return Err(PolyError::RingMismatch.into());
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Ideal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// Product of two ideals of the same ring.
    pub fn product(&self, other: &Ideal<K>) -> Result<Ideal<K>> {
        if !self.ring.same(&other.ring) {
            return Err(PolyError::RingMismatch.into());
        }
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f * g);
            }
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            gens,
        })
    }

    /// The same ideal in a ring with the same variables (another order or
    /// grading).
    pub fn to_ring(&self, ring: &PolynomialRing<K>) -> Ideal<K> {
        Ideal {
            ring: ring.clone(),
            gens: self.gens.iter().map(|g| g.to_ring(ring)).collect(),
        }
    }
}

impl<K: Field> fmt::Display for Ideal<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Sorts by standard degree, keeping the relative order of ties.
pub(crate) fn sort_by_degree<K: Field>(gens: &mut [Polynomial<K>]) {
    gens.sort_by_key(|g| g.sugar());
}

/// A reduced Groebner basis of an ideal for a fixed order. The elements
/// live in [`GroebnerBasis::ring`], the ideal's ring equipped with that
/// order, sorted by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<K: Field = Rationals> {
    ideal: Ideal<K>,
    ring: PolynomialRing<K>,
    elements: Vec<Polynomial<K>>,
    reduced: bool,
    complete_through: Option<i64>,
}

impl<K: Field> GroebnerBasis<K> {
    fn compute(ideal: &Ideal<K>, ring: PolynomialRing<K>, degree_bound: Option<i64>) -> Self {
        let gens: Vec<Polynomial<K>> = ideal.gens.iter().map(|g| g.to_ring(&ring)).collect();
        let out = buchberger(
            &ring,
            &gens,
            &EngineConfig {
                ncomp: 0,
                degree_bound,
            },
        );
        GroebnerBasis {
            ideal: ideal.clone(),
            ring,
            elements: out.basis,
            reduced: true,
            complete_through: if out.complete { None } else { degree_bound },
        }
    }

    pub fn ideal(&self) -> &Ideal<K> {
        &self.ideal
    }

    pub fn ring(&self) -> &PolynomialRing<K> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// `Some(d)` if the basis was only computed through degree `d`.
    pub fn truncated_at(&self) -> Option<i64> {
        self.complete_through
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero").clone())
            .collect()
    }

    /// The initial ideal, as a monomial ideal of the basis ring.
    pub fn initial_ideal(&self) -> Ideal<K> {
        Ideal::monomial(&self.ring, self.leading_monomials())
    }

    /// Remainder of `f` on division by the basis. `f` may live in any ring
    /// with the same variables; the result lives in the basis ring.
    pub fn normal_form(&self, f: &Polynomial<K>) -> Polynomial<K> {
        let f = f.to_ring(&self.ring);
        let lms = self.leading_monomials();
        let masks: Vec<u64> = lms.iter().map(Monomial::support_mask).collect();
        let reducers: Vec<(&Monomial, u64, &Polynomial<K>)> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, g)| (&lms[i], masks[i], g))
            .collect();
        reduce_full(&self.ring, f, &reducers)
    }

    pub fn contains(&self, f: &Polynomial<K>) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    /// Largest standard degree of a basis element.
    pub fn max_degree(&self) -> Option<u32> {
        self.elements.iter().filter_map(Polynomial::total_degree).max()
    }

    /// Re-checks Buchberger's criterion on the stored elements.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        is_groebner(&self.ring, &self.elements, 0)
    }
}

impl<K: Field> PartialEq for GroebnerBasis<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.elements == other.elements
    }
}

/// Reduced Groebner basis of `ideal` under `order`.
pub fn reduced_groebner_basis<K: Field>(
    ideal: &Ideal<K>,
    order: &MonomialOrder,
) -> Result<GroebnerBasis<K>> {
    let ring = ideal.ring.with_order(order.clone())?;
    Ok(GroebnerBasis::compute(ideal, ring, None))
}

/// Groebner basis of a homogeneous ideal computed only through `degree`:
/// exact for every question about elements of degree at most `degree`.
pub fn truncated_groebner_basis<K: Field>(ideal: &Ideal<K>, degree: i64) -> Result<GroebnerBasis<K>> {
    ideal.require_homogeneous()?;
    Ok(GroebnerBasis::compute(ideal, ideal.ring.clone(), Some(degree)))
}

/// Remainder of `f` on division by `basis`.
pub fn normal_form<K: Field>(f: &Polynomial<K>, basis: &GroebnerBasis<K>) -> Polynomial<K> {
    basis.normal_form(f)
}

/// Multidegree of a homogeneous polynomial, or an error naming it.
pub(crate) fn homogeneous_degree<K: Field>(f: &Polynomial<K>) -> Result<Vec<i64>> {
    match f.homogeneity() {
        Homogeneity::Homogeneous(d) => Ok(d.0),
        Homogeneity::Zero => Ok(vec![0; f.ring().grading_rank()]),
        Homogeneity::Inhomogeneous => Err(Error::Inhomogeneous(f.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(names: &[&str]) -> PolynomialRing {
        PolynomialRing::rationals(names).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap();
        for order in [MonomialOrder::Lex, MonomialOrder::DegLex, MonomialOrder::DegRevLex] {
            let gb = reduced_groebner_basis(&i, &order).unwrap();
            assert_eq!(gb.len(), 3);
            assert!(gb.elements().iter().all(|g| g.is_monomial()));
        }
    }

    #[test]
    fn twisted_cubic() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = Ideal::parse(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]).unwrap();
        let gb = i.groebner_basis();
        assert_eq!(gb.len(), 3);
        assert!(gb.satisfies_buchberger_criterion());
        let lex = reduced_groebner_basis(&i, &MonomialOrder::Lex).unwrap();
        assert!(lex.satisfies_buchberger_criterion());
        assert!(lex.contains(&r.parse("x*z - y^2").unwrap()));
        assert!(!lex.contains(&r.parse("x*y").unwrap()));
    }

    #[test]
    fn normal_form_basics() {
        let r = ring(&["a", "b", "c", "d"]);
        let i = Ideal::parse(&r, &["a*c", "a*d", "a*b - b*d", "a^2 + b*c", "b^2"]).unwrap();
        let gb = i.groebner_basis();
        assert_eq!(gb.normal_form(&r.parse("a*b").unwrap()), r.parse("b*d").unwrap());
        assert_eq!(gb.normal_form(&r.one()), r.one());
        assert!(gb.normal_form(&r.parse("a*c*d + b^2").unwrap()).is_zero());
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^2", "x^2*y", "x*y", "x^2 + x*y"]).unwrap();
        let m = i.minimal_generators().unwrap();
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn truncated_basis_is_flagged() {
        let r = ring(&["x", "y", "z", "w"]);
        let i = Ideal::parse(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"]).unwrap();
        let t = truncated_groebner_basis(&i, 1).unwrap();
        assert_eq!(t.truncated_at(), Some(1));
        assert!(t.is_empty());
    }
}
