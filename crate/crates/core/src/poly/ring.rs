use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::field::{Field, Rationals};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::polynomial::Polynomial;
use crate::error::PolyError;

/// A polynomial ring `K[x_1, ..., x_n]` with a `Z^m` grading and an active
/// monomial order. Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct PolynomialRing<K: Field = Rationals> {
    inner: Arc<RingData<K>>,
}

struct RingData<K> {
    field: K,
    names: Vec<String>,
    grading: Vec<Vec<i64>>,
    order: MonomialOrder,
    /// Positive per-variable weights used as the "degree" of the
    /// Buchberger sugar strategy: the column sums of the grading when these
    /// are all positive, the standard degree otherwise.
    weights: Vec<i64>,
}

impl PolynomialRing<Rationals> {
    /// `Q[names]` with the standard grading and degrevlex.
    pub fn rationals(names: &[&str]) -> Result<Self, PolyError> {
        Self::new(Rationals, names.iter().copied())
    }
}

impl<K: Field> PolynomialRing<K> {
    pub fn new<S: Into<String>>(
        field: K,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || names[..i].contains(n) {
                return Err(PolyError::InvalidVariableName(n.clone()));
            }
        }
        let n = names.len();
        Ok(PolynomialRing {
            inner: Arc::new(RingData {
                field,
                names,
                grading: vec![vec![1; n]],
                order: MonomialOrder::DegRevLex,
                weights: vec![1; n],
            }),
        })
    }

    /// Same variables and field, new grading matrix (`m` rows, one column
    /// per variable, no zero column).
    pub fn with_grading(&self, rows: Vec<Vec<i64>>) -> Result<Self, PolyError> {
        let n = self.nvars();
        if rows.is_empty() {
            return Err(PolyError::InvalidGrading {
                expected: n,
                reason: "no rows".into(),
            });
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(PolyError::InvalidGrading {
                expected: n,
                reason: format!("row has {} entries", r.len()),
            });
        }
        for j in 0..n {
            if rows.iter().all(|r| r[j] == 0) {
                return Err(PolyError::InvalidGrading {
                    expected: n,
                    reason: format!("variable {} has degree zero", self.inner.names[j]),
                });
            }
        }
        let sums: Vec<i64> = (0..n).map(|j| rows.iter().map(|r| r[j]).sum()).collect();
        let weights = if sums.iter().all(|&s| s > 0) {
            sums
        } else {
            vec![1; n]
        };
        Ok(PolynomialRing {
            inner: Arc::new(RingData {
                field: self.inner.field.clone(),
                names: self.inner.names.clone(),
                grading: rows,
                order: self.inner.order.clone(),
                weights,
            }),
        })
    }

    /// Unchecked constructor for internal rings whose leading slots encode
    /// free-module components (those slots may have weight zero).
    pub(crate) fn raw(
        field: K,
        names: Vec<String>,
        grading: Vec<Vec<i64>>,
        order: MonomialOrder,
        weights: Vec<i64>,
    ) -> Self {
        PolynomialRing {
            inner: Arc::new(RingData {
                field,
                names,
                grading,
                order,
                weights,
            }),
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<Self, PolyError> {
        order.validate(self.nvars())?;
        Ok(PolynomialRing {
            inner: Arc::new(RingData {
                field: self.inner.field.clone(),
                names: self.inner.names.clone(),
                grading: self.inner.grading.clone(),
                order,
                weights: self.inner.weights.clone(),
            }),
        })
    }

    /// A ring with the same field and order settings but new variables and
    /// the standard grading.
    pub fn with_variables<S: Into<String>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<Self, PolyError> {
        PolynomialRing::new(self.inner.field.clone(), names)
    }

    pub fn field(&self) -> &K {
        &self.inner.field
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn nvars(&self) -> usize {
        self.inner.names.len()
    }

    pub fn grading(&self) -> &[Vec<i64>] {
        &self.inner.grading
    }

    pub fn grading_rank(&self) -> usize {
        self.inner.grading.len()
    }

    pub fn is_standard_graded(&self) -> bool {
        self.inner.grading.len() == 1 && self.inner.grading[0].iter().all(|&w| w == 1)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.inner.order
    }

    pub fn sugar_weights(&self) -> &[i64] {
        &self.inner.weights
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|n| n == name)
    }

    /// Identity of rings: same field, variables, grading and order.
    pub fn same(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.names == other.inner.names
                && self.inner.grading == other.inner.grading
                && self.inner.order == other.inner.order)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.inner.order.compare(a, b)
    }

    pub fn multidegree(&self, m: &Monomial) -> Vec<i64> {
        m.multidegree(&self.inner.grading)
    }

    pub fn sugar(&self, m: &Monomial) -> i64 {
        m.weighted_degree(&self.inner.weights)
    }

    pub fn zero(&self) -> Polynomial<K> {
        Polynomial::from_sorted_terms(self.clone(), Vec::new())
    }

    pub fn one(&self) -> Polynomial<K> {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: K::Elem) -> Polynomial<K> {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn term(&self, c: K::Elem, m: Monomial) -> Polynomial<K> {
        let terms = if self.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(c, m)]
        };
        Polynomial::from_sorted_terms(self.clone(), terms)
    }

    pub fn monomial(&self, m: Monomial) -> Polynomial<K> {
        self.term(self.field().one(), m)
    }

    pub fn var(&self, i: usize) -> Polynomial<K> {
        self.monomial(Monomial::var(self.nvars(), i, 1))
    }

    pub fn var_named(&self, name: &str) -> Option<Polynomial<K>> {
        self.index_of(name).map(|i| self.var(i))
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates
    /// and drops zeros.
    pub fn from_terms(&self, terms: Vec<(K::Elem, Monomial)>) -> Polynomial<K> {
        Polynomial::from_sorted_terms(self.clone(), self.normalize_terms(terms))
    }

    /// Wraps terms that are already sorted, merged and nonzero.
    pub(crate) fn from_sorted_parts(&self, terms: Vec<(K::Elem, Monomial)>) -> Polynomial<K> {
        Polynomial::from_sorted_terms(self.clone(), terms)
    }

    pub(crate) fn normalize_terms(
        &self,
        mut terms: Vec<(K::Elem, Monomial)>,
    ) -> Vec<(K::Elem, Monomial)> {
        let field = self.field();
        terms.sort_by(|a, b| self.compare(&b.1, &a.1));
        let mut out: Vec<(K::Elem, Monomial)> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 = field.add(&last.0, &c),
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !field.is_zero(c));
        out
    }

    /// Parses a polynomial written as `coeff*var^e*...` terms joined by `+`
    /// and `-`.
    pub fn parse(&self, text: &str) -> Result<Polynomial<K>, PolyError> {
        super::parse::parse_polynomial(self, text)
    }

    /// Parses a list of polynomials, returning the first error.
    pub fn parse_all(&self, texts: &[&str]) -> Result<Vec<Polynomial<K>>, PolyError> {
        texts.iter().map(|t| self.parse(t)).collect()
    }
}

impl<K: Field> PartialEq for PolynomialRing<K> {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl<K: Field> fmt::Debug for PolynomialRing<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}] ({})",
            self.field().descriptor(),
            self.names().join(","),
            self.order()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_names() {
        assert!(PolynomialRing::rationals(&["x", "x"]).is_err());
        assert!(PolynomialRing::rationals(&["x", ""]).is_err());
    }

    #[test]
    fn grading_validation() {
        let r = PolynomialRing::rationals(&["x", "y"]).unwrap();
        assert!(r.is_standard_graded());
        assert!(r.with_grading(vec![vec![1, 0]]).is_err());
        let bi = r.with_grading(vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(!bi.is_standard_graded());
        assert_eq!(bi.sugar_weights(), &[1, 1]);
        assert!(r.with_grading(vec![vec![1]]).is_err());
    }
}
