//! Sparse exact linear algebra over a coefficient field.
//!
//! Vectors are lists of `(index, coefficient)` sorted by index with no zero
//! coefficients. Echelon rows are kept monic at their smallest index.

use std::collections::{BTreeMap, HashMap};

use crate::poly::Field;

pub type SparseVec<E> = Vec<(usize, E)>;

/// `acc += c * v`, dropping cancellations.
fn axpy<K: Field>(field: &K, acc: &mut BTreeMap<usize, K::Elem>, c: &K::Elem, v: &[(usize, K::Elem)]) {
    for (i, x) in v {
        let term = field.mul(c, x);
        match acc.get_mut(i) {
            Some(y) => {
                *y = field.add(y, &term);
                if field.is_zero(y) {
                    acc.remove(i);
                }
            }
            None => {
                acc.insert(*i, term);
            }
        }
    }
}

fn to_map<K: Field>(v: &[(usize, K::Elem)]) -> BTreeMap<usize, K::Elem> {
    v.iter().cloned().collect()
}

struct Row<E> {
    vec: SparseVec<E>,
    combo: SparseVec<E>,
}

/// Incremental row echelon form, optionally tracking each row as a
/// combination of the inserted vectors.
pub struct Echelon<'a, K: Field> {
    field: &'a K,
    rows: Vec<Row<K::Elem>>,
    pivots: HashMap<usize, usize>,
    track: bool,
    inserted: usize,
}

impl<'a, K: Field> Echelon<'a, K> {
    pub fn new(field: &'a K) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
            pivots: HashMap::new(),
            track: false,
            inserted: 0,
        }
    }

    pub fn tracking(field: &'a K) -> Self {
        Echelon {
            track: true,
            ..Self::new(field)
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the rows; returns the remainder and, when
    /// tracking, the combination of inserted vectors subtracted.
    fn reduce_tracked(
        &self,
        v: &[(usize, K::Elem)],
        combo: BTreeMap<usize, K::Elem>,
    ) -> (BTreeMap<usize, K::Elem>, BTreeMap<usize, K::Elem>) {
        let f = self.field;
        let mut acc = to_map::<K>(v);
        let mut combo = combo;
        let mut cursor = 0usize;
        loop {
            let next = acc
                .range(cursor..)
                .find(|(i, _)| self.pivots.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            let Some((i, c)) = next else { break };
            let row = &self.rows[self.pivots[&i]];
            let neg = f.neg(&c);
            axpy(f, &mut acc, &neg, &row.vec);
            if self.track {
                axpy(f, &mut combo, &neg, &row.combo);
            }
            cursor = i + 1;
        }
        (acc, combo)
    }

    pub fn reduce(&self, v: &[(usize, K::Elem)]) -> SparseVec<K::Elem> {
        self.reduce_tracked(v, BTreeMap::new()).0.into_iter().collect()
    }

    pub fn contains(&self, v: &[(usize, K::Elem)]) -> bool {
        self.reduce_tracked(v, BTreeMap::new()).0.is_empty()
    }

    /// Inserts `v`. When it depends on the rows already present, returns
    /// `Some(combination)` of inserted vectors (by insertion number) that
    /// sums to zero and involves `v` with coefficient one; otherwise `None`.
    pub fn insert(&mut self, v: &[(usize, K::Elem)]) -> Option<SparseVec<K::Elem>> {
        let f = self.field;
        let id = self.inserted;
        self.inserted += 1;
        let mut start = BTreeMap::new();
        if self.track {
            start.insert(id, f.one());
        }
        let (rem, combo) = self.reduce_tracked(v, start);
        if rem.is_empty() {
            return Some(combo.into_iter().collect());
        }
        let (&pivot, lead) = rem.iter().next().expect("nonempty remainder");
        let inv = f.inv(lead);
        let scale = |m: BTreeMap<usize, K::Elem>| -> SparseVec<K::Elem> {
            m.into_iter().map(|(i, c)| (i, f.mul(&inv, &c))).collect()
        };
        let vec = scale(rem);
        let combo = scale(combo);
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(Row { vec, combo });
        None
    }
}

/// Rank of a list of vectors.
pub fn rank<K: Field>(field: &K, vectors: &[SparseVec<K::Elem>]) -> usize {
    let mut e = Echelon::new(field);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// A basis of the relations `sum a_t v_t = 0`, as sparse vectors indexed by
/// `t`.
pub fn kernel<K: Field>(field: &K, vectors: &[SparseVec<K::Elem>]) -> Vec<SparseVec<K::Elem>> {
    let mut e = Echelon::tracking(field);
    vectors.iter().filter_map(|v| e.insert(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{PrimeField, Rationals};
    use num_rational::BigRational;

    fn q(v: &[(usize, i64)]) -> SparseVec<BigRational> {
        v.iter().map(|&(i, c)| (i, BigRational::from_integer(c.into()))).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let k = Rationals;
        let vs = vec![q(&[(0, 1), (1, 2)]), q(&[(1, 1), (2, 1)]), q(&[(0, 1), (1, 4), (2, 2)]), q(&[])];
        assert_eq!(rank(&k, &vs), 2);
        let ker = kernel(&k, &vs);
        assert_eq!(ker.len(), 2);
        for rel in &ker {
            let mut acc = BTreeMap::new();
            for (t, c) in rel {
                axpy(&k, &mut acc, c, &vs[*t]);
            }
            assert!(acc.is_empty());
        }
    }

    #[test]
    fn prime_field_dependence() {
        let k = PrimeField::new(3).unwrap();
        let v = |a: &[(usize, i64)]| -> SparseVec<u64> { a.iter().map(|&(i, c)| (i, k.from_i64(c))).collect() };
        let mut e = Echelon::new(&k);
        assert!(e.insert(&v(&[(0, 1), (1, 1)])).is_none());
        assert!(e.insert(&v(&[(0, 2), (1, 2)])).is_some());
        assert!(e.contains(&v(&[(0, 4), (1, 1)])));
        assert_eq!(e.reduce(&v(&[(0, 1)])), v(&[(1, 2)]));
    }
}
