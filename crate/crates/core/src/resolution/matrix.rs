use crate::groebner::QuotientRing;
use crate::poly::{Field, Polynomial, PolynomialRing, Rationals};

/// A map of graded free modules `⊕ R(-col_shifts) -> ⊕ R(-row_shifts)`,
/// stored by columns (the images of the source basis vectors).
#[derive(Clone, Debug)]
pub struct GradedMatrix<K: Field = Rationals> {
    ring: PolynomialRing<K>,
    row_shifts: Vec<i64>,
    col_shifts: Vec<i64>,
    columns: Vec<Vec<Polynomial<K>>>,
}

impl<K: Field> GradedMatrix<K> {
    /// Panics if a column has the wrong length.
    pub fn new(
        ring: &PolynomialRing<K>,
        row_shifts: Vec<i64>,
        col_shifts: Vec<i64>,
        columns: Vec<Vec<Polynomial<K>>>,
    ) -> Self {
        assert_eq!(col_shifts.len(), columns.len(), "one column per source shift");
        assert!(columns.iter().all(|c| c.len() == row_shifts.len()), "column length");
        GradedMatrix {
            ring: ring.clone(),
            row_shifts,
            col_shifts,
            columns,
        }
    }

    pub fn ring(&self) -> &PolynomialRing<K> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.row_shifts.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_shifts.len()
    }

    pub fn row_shifts(&self) -> &[i64] {
        &self.row_shifts
    }

    pub fn col_shifts(&self) -> &[i64] {
        &self.col_shifts
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial<K> {
        &self.columns[col][row]
    }

    pub fn column(&self, col: usize) -> &[Polynomial<K>] {
        &self.columns[col]
    }

    /// Every nonzero entry is homogeneous of degree `col shift - row shift`.
    pub fn is_graded(&self) -> bool {
        self.columns.iter().zip(&self.col_shifts).all(|(col, &c)| {
            col.iter().zip(&self.row_shifts).all(|(e, &r)| {
                e.is_zero() || (e.is_homogeneous() && e.sugar() == c - r)
            })
        })
    }

    /// No nonzero constant entry (the image lies in `m F`).
    pub fn is_minimal(&self) -> bool {
        self.columns.iter().flatten().all(|e| e.is_zero() || !e.is_constant())
    }

    /// `self * other`, where `other` maps into the source of `self`.
    pub fn compose(&self, other: &GradedMatrix<K>) -> GradedMatrix<K> {
        assert_eq!(self.ncols(), other.nrows(), "composable shapes");
        let columns = other
            .columns
            .iter()
            .map(|oc| {
                (0..self.nrows())
                    .map(|r| {
                        oc.iter()
                            .enumerate()
                            .filter(|(_, e)| !e.is_zero())
                            .fold(self.ring.zero(), |acc, (k, e)| &acc + &(&self.columns[k][r] * e))
                    })
                    .collect()
            })
            .collect();
        GradedMatrix::new(&self.ring, self.row_shifts.clone(), other.col_shifts.clone(), columns)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(Polynomial::is_zero)
    }

    /// Whether every entry vanishes in the quotient.
    pub fn is_zero_in(&self, q: &QuotientRing<K>) -> bool {
        self.columns.iter().flatten().all(|e| q.is_zero(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koszul_maps_compose_to_zero() {
        let r = PolynomialRing::rationals(&["x", "y"]).unwrap();
        let x = r.var(0);
        let y = r.var(1);
        let d1 = GradedMatrix::new(&r, vec![0], vec![1, 1], vec![vec![x.clone()], vec![y.clone()]]);
        let d2 = GradedMatrix::new(&r, vec![1, 1], vec![2], vec![vec![y.clone(), -&x]]);
        assert!(d1.is_graded() && d2.is_graded());
        assert!(d1.is_minimal());
        assert!(d1.compose(&d2).is_zero());
    }
}
