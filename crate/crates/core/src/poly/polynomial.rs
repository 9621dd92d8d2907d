use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use super::field::{Field, Rationals};
use super::monomial::Monomial;
use super::ring::PolynomialRing;
use crate::error::PolyError;

/// Element of `Z^m`, the degree of a homogeneous element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Multidegree(pub Vec<i64>);

impl Multidegree {
    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        Multidegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Outcome of asking for the degree of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Homogeneous(Multidegree),
    Inhomogeneous,
}

/// Sparse polynomial: nonzero terms sorted strictly decreasing under the
/// ring's order. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial<K: Field = Rationals> {
    ring: PolynomialRing<K>,
    terms: Vec<(K::Elem, Monomial)>,
}

impl<K: Field> Polynomial<K> {
    pub(crate) fn from_sorted_terms(ring: PolynomialRing<K>, terms: Vec<(K::Elem, Monomial)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.compare(&w[0].1, &w[1].1) == Ordering::Greater));
        Polynomial { ring, terms }
    }

    pub fn ring(&self) -> &PolynomialRing<K> {
        &self.ring
    }

    pub fn terms(&self) -> &[(K::Elem, Monomial)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(K::Elem, Monomial)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(K::Elem, Monomial)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn leading_coeff(&self) -> Option<&K::Elem> {
        self.terms.first().map(|t| &t.0)
    }

    /// Largest standard degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.1.degree()).max()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.1.is_one())
    }

    /// Degree with respect to the ring's grading.
    pub fn homogeneity(&self) -> Homogeneity {
        let mut iter = self.terms.iter();
        let Some((_, first)) = iter.next() else {
            return Homogeneity::Zero;
        };
        let d = self.ring.multidegree(first);
        if iter.all(|(_, m)| self.ring.multidegree(m) == d) {
            Homogeneity::Homogeneous(Multidegree(d))
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self.homogeneity(), Homogeneity::Inhomogeneous)
    }

    /// Whether all terms have the same standard degree.
    pub fn is_standard_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((_, m)) => self.terms.iter().all(|t| t.1.degree() == m.degree()),
        }
    }

    /// Sugar degree: largest weighted degree of a term.
    pub fn sugar(&self) -> i64 {
        self.terms.iter().map(|t| self.ring.sugar(&t.1)).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(a, m)| (field.mul(a, c), m.clone())).collect();
        Polynomial::from_sorted_terms(self.ring.clone(), terms)
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, c: &K::Elem, m: &Monomial) -> Self {
        let field = self.ring.field();
        if field.is_zero(c) {
            return self.ring.zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(a, t)| (field.mul(a, c), t.mul(m)))
            .collect();
        Polynomial::from_sorted_terms(self.ring.clone(), terms)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if self.ring.field().is_one(lc) => self.clone(),
            Some(lc) => self.scale(&self.ring.field().inv(lc)),
        }
    }

    /// `self + c * m * g`, computed by a single merge.
    pub fn add_scaled(&self, c: &K::Elem, m: &Monomial, g: &Polynomial<K>) -> Self {
        let terms = merge_scaled(&self.ring, &self.terms, c, m, &g.terms);
        Polynomial::from_sorted_terms(self.ring.clone(), terms)
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let one = self.ring.field().one();
        Ok(self.add_scaled(&one, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        let m1 = self.ring.field().from_i64(-1);
        Ok(self.add_scaled(&m1, &Monomial::one(self.ring.nvars()), other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (c, m) = &small.terms[0];
            return Ok(large.mul_term(c, m));
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(small.len() * large.len());
        for (a, ma) in &small.terms {
            for (b, mb) in &large.terms {
                terms.push((field.mul(a, b), ma.mul(mb)));
            }
        }
        Ok(self.ring.from_terms(terms))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        let (lc, lm) = g.leading_term()?;
        let field = self.ring.field();
        let lc_inv = field.inv(lc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((c, m)) = rem.leading_term() {
            let q = lm.quotient_of(m)?;
            let qc = field.mul(c, &lc_inv);
            rem = rem.add_scaled(&field.neg(&qc), &q, g);
            quot.push((qc, q));
        }
        Some(Polynomial::from_sorted_terms(self.ring.clone(), quot))
    }

    /// Evaluates variable `i` at `images[i]`, producing an element of the
    /// images' ring.
    pub fn substitute(&self, target: &PolynomialRing<K>, images: &[Polynomial<K>]) -> Polynomial<K> {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let mut acc = Vec::new();
        // Cache powers of the images; exponents are small.
        let mut powers: Vec<Vec<Polynomial<K>>> = vec![vec![target.one()]; images.len()];
        for (c, m) in &self.terms {
            let mut prod = target.constant(c.clone());
            for i in m.support() {
                let e = m.exp(i) as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                prod = &prod * &powers[i][e];
            }
            acc.extend(prod.terms);
        }
        target.from_terms(acc)
    }

    /// Renames variable `i` to variable `map[i]` of `target`.
    pub fn relabel(&self, target: &PolynomialRing<K>, map: &[usize]) -> Polynomial<K> {
        let n = target.nvars();
        target.from_terms(
            self.terms
                .iter()
                .map(|(c, m)| (c.clone(), m.relabel(map, n)))
                .collect(),
        )
    }

    /// The same polynomial viewed in a ring with the same variables but
    /// possibly another order or grading.
    pub fn to_ring(&self, target: &PolynomialRing<K>) -> Polynomial<K> {
        assert_eq!(target.nvars(), self.ring.nvars(), "variable count mismatch");
        if target.same(&self.ring) {
            return self.clone();
        }
        target.from_terms(self.terms.clone())
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> K::Elem {
        match self
            .terms
            .binary_search_by(|t| self.ring.compare(m, &t.1))
        {
            Ok(i) => self.terms[i].0.clone(),
            Err(_) => self.ring.field().zero(),
        }
    }
}

/// `a + c * m * b` for sorted term lists.
pub(crate) fn merge_scaled<K: Field>(
    ring: &PolynomialRing<K>,
    a: &[(K::Elem, Monomial)],
    c: &K::Elem,
    m: &Monomial,
    b: &[(K::Elem, Monomial)],
) -> Vec<(K::Elem, Monomial)> {
    let field = ring.field();
    let shift = !m.is_one();
    let unit = field.is_one(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(bc, bm)| {
        let coeff = if unit { bc.clone() } else { field.mul(bc, c) };
        let mono = if shift { bm.mul(m) } else { bm.clone() };
        (coeff, mono)
    });
    let mut next_b = bi.next();
    while let Some((bc, bm)) = next_b.take() {
        while i < a.len() && ring.compare(&a[i].1, &bm) == Ordering::Greater {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].1 == bm {
            let s = field.add(&a[i].0, &bc);
            if !field.is_zero(&s) {
                out.push((s, bm));
            }
            i += 1;
        } else {
            out.push((bc, bm));
        }
        next_b = bi.next();
    }
    out.extend_from_slice(&a[i..]);
    out
}

impl<K: Field> PartialEq for Polynomial<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl<K: Field> Eq for Polynomial<K> {}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        let names = self.ring.names();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs_one = field.is_one(c) || field.is_one(&field.neg(c));
            if m.is_one() {
                let mut s = String::new();
                field.fmt_abs(c, &mut s)?;
                write!(f, "{s}")?;
            } else {
                if !abs_one {
                    let mut s = String::new();
                    field.fmt_abs(c, &mut s)?;
                    write!(f, "{s}*")?;
                }
                let mut s = String::new();
                m.fmt_with(names, &mut s)?;
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<K: Field> Add for &Polynomial<K> {
    type Output = Polynomial<K>;

    /// Panics if the operands live in different rings.
    fn add(self, rhs: Self) -> Polynomial<K> {
        self.try_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<K: Field> Sub for &Polynomial<K> {
    type Output = Polynomial<K>;

    fn sub(self, rhs: Self) -> Polynomial<K> {
        self.try_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<K: Field> Mul for &Polynomial<K> {
    type Output = Polynomial<K>;

    fn mul(self, rhs: Self) -> Polynomial<K> {
        self.try_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl<K: Field> Neg for &Polynomial<K> {
    type Output = Polynomial<K>;

    fn neg(self) -> Polynomial<K> {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(c, m)| (field.neg(c), m.clone())).collect();
        Polynomial::from_sorted_terms(self.ring.clone(), terms)
    }
}

/// Binary ring operations on polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact `f op g` in canonical form; fails if the rings differ.
pub fn poly_arith<K: Field>(
    op: ArithOp,
    f: &Polynomial<K>,
    g: &Polynomial<K>,
) -> Result<Polynomial<K>, PolyError> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}

/// Degree of a polynomial with respect to its ring's grading.
pub fn multidegree_of<K: Field>(f: &Polynomial<K>) -> Homogeneity {
    f.homogeneity()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolynomialRing {
        PolynomialRing::rationals(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn additive_inverse() {
        let r = ring();
        let f = r.parse("x^2 - 3*y*z + 1/2").unwrap();
        assert!(poly_arith(ArithOp::Add, &f, &-&f).unwrap().is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let f = r.parse("x + y").unwrap();
        let g = r.parse("x - y").unwrap();
        assert_eq!(&f * &g, r.parse("x^2 - y^2").unwrap());
    }

    #[test]
    fn hand_expansion() {
        let r = ring();
        let f = r.parse("x^2 + y*z").unwrap();
        let g = r.parse("y^2 + x*z").unwrap();
        let expected = r.parse("x^2*y^2 + x^3*z + y^3*z + x*y*z^2").unwrap();
        assert_eq!(poly_arith(ArithOp::Mul, &f, &g).unwrap(), expected);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring();
        let s = PolynomialRing::rationals(&["x", "y"]).unwrap();
        assert_eq!(
            poly_arith(ArithOp::Add, &r.var(0), &s.var(0)),
            Err(PolyError::RingMismatch)
        );
    }

    #[test]
    fn multidegrees() {
        let r = ring();
        assert_eq!(
            multidegree_of(&r.parse("x*y").unwrap()),
            Homogeneity::Homogeneous(Multidegree(vec![2]))
        );
        assert_eq!(multidegree_of(&r.parse("x + x*y").unwrap()), Homogeneity::Inhomogeneous);
        let bi = PolynomialRing::rationals(&["x1", "x2", "y1", "y2"])
            .unwrap()
            .with_grading(vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]])
            .unwrap();
        assert_eq!(
            multidegree_of(&bi.parse("x1*y1").unwrap()),
            Homogeneity::Homogeneous(Multidegree(vec![1, 1]))
        );
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let f = r.parse("x^2 - y^2").unwrap();
        let g = r.parse("x + y").unwrap();
        assert_eq!(f.div_exact(&g), Some(r.parse("x - y").unwrap()));
        assert_eq!(r.parse("x^2 + y").unwrap().div_exact(&g), None);
    }

    #[test]
    fn substitution() {
        let r = ring();
        let s = PolynomialRing::rationals(&["u", "v"]).unwrap();
        let f = r.parse("x*z - y^2").unwrap();
        let images = s.parse_all(&["u^2", "u*v", "v^2"]).unwrap();
        assert!(f.substitute(&s, &images).is_zero());
    }

    #[test]
    fn display_round_trips() {
        let r = ring();
        let f = r.parse("-x^2*y + 3/2*z - 1").unwrap();
        let text = f.to_string();
        assert_eq!(text, "-x^2*y + 3/2*z - 1");
        assert_eq!(r.parse(&text).unwrap(), f);
    }
}
