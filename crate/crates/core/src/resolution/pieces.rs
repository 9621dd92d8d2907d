//! Graded pieces of a quotient ring and of free modules over it, as
//! coordinate spaces on standard monomials.

use std::collections::{BTreeMap, HashMap};

use crate::groebner::QuotientRing;
use crate::linalg::SparseVec;
use crate::poly::{Field, Monomial, Polynomial};

/// Bases of `R_e` by standard monomials, with tables for multiplication by
/// each variable.
pub(crate) struct Pieces<'a, K: Field> {
    pub q: &'a QuotientRing<K>,
    pub n: usize,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// `mult[e][idx][v]`: `x_v * bases[e][idx]` in the basis of degree `e + 1`.
    mult: Vec<Vec<Vec<SparseVec<K::Elem>>>>,
}

impl<'a, K: Field> Pieces<'a, K> {
    pub fn new(q: &'a QuotientRing<K>) -> Self {
        Pieces {
            q,
            n: q.nvars(),
            bases: Vec::new(),
            index: Vec::new(),
            mult: Vec::new(),
        }
    }

    pub fn field(&self) -> &K {
        self.q.ambient().field()
    }

    /// Makes bases available through degree `d`.
    pub fn ensure(&mut self, d: i64) {
        while (self.bases.len() as i64) <= d {
            let e = self.bases.len() as u32;
            let basis = self.q.standard_monomials(e);
            let index = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
            self.bases.push(basis);
            self.index.push(index);
            if e > 0 {
                let table = self.multiplication_table(e as usize - 1);
                self.mult.push(table);
            }
        }
    }

    fn multiplication_table(&self, e: usize) -> Vec<Vec<SparseVec<K::Elem>>> {
        let ring = self.q.ambient();
        self.bases[e]
            .iter()
            .map(|m| {
                (0..self.n)
                    .map(|v| {
                        let prod = m.mul(&Monomial::var(self.n, v, 1));
                        let nf = self.q.reduce(&ring.monomial(prod));
                        self.coordinates(&nf, e + 1)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn dim(&self, e: i64) -> usize {
        if e < 0 {
            0
        } else {
            self.bases[e as usize].len()
        }
    }

    pub fn basis(&self, e: i64) -> &[Monomial] {
        &self.bases[e as usize]
    }

    pub fn index_of(&self, e: i64, m: &Monomial) -> usize {
        self.index[e as usize][m]
    }

    pub fn mul_var(&self, e: i64, idx: usize, v: usize) -> &SparseVec<K::Elem> {
        &self.mult[e as usize][idx][v]
    }

    /// Coordinates of a reduced homogeneous polynomial of degree `e`.
    pub fn coordinates(&self, f: &Polynomial<K>, e: usize) -> SparseVec<K::Elem> {
        let mut v: SparseVec<K::Elem> = f
            .terms()
            .iter()
            .map(|(c, m)| (self.index[e][m], c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    /// Offsets of the blocks of `(⊕ R(-shifts))_j`; the last entry is the
    /// total dimension.
    pub fn offsets(&self, shifts: &[i64], j: i64) -> Vec<usize> {
        let mut out = Vec::with_capacity(shifts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &s in shifts {
            acc += self.dim(j - s);
            out.push(acc);
        }
        out
    }

    /// `x_v * u` for `u` in `(⊕ R(-shifts))_j`.
    pub fn mul_vec(&self, shifts: &[i64], j: i64, u: &[(usize, K::Elem)], v: usize) -> SparseVec<K::Elem> {
        let f = self.field();
        let from = self.offsets(shifts, j);
        let to = self.offsets(shifts, j + 1);
        let mut acc: BTreeMap<usize, K::Elem> = BTreeMap::new();
        for (g, c) in u {
            let k = from.partition_point(|&o| o <= *g) - 1;
            let local = g - from[k];
            for (t, a) in self.mul_var(j - shifts[k], local, v) {
                let key = to[k] + t;
                let term = f.mul(c, a);
                match acc.get_mut(&key) {
                    Some(y) => {
                        *y = f.add(y, &term);
                        if f.is_zero(y) {
                            acc.remove(&key);
                        }
                    }
                    None => {
                        acc.insert(key, term);
                    }
                }
            }
        }
        acc.into_iter().collect()
    }

    /// The vector of polynomials represented by `u` in `(⊕ R(-shifts))_j`.
    pub fn to_polynomials(&self, shifts: &[i64], j: i64, u: &[(usize, K::Elem)]) -> Vec<Polynomial<K>> {
        let offs = self.offsets(shifts, j);
        let mut parts: Vec<Vec<(K::Elem, Monomial)>> = vec![Vec::new(); shifts.len()];
        for (g, c) in u {
            let k = offs.partition_point(|&o| o <= *g) - 1;
            let m = self.bases[(j - shifts[k]) as usize][g - offs[k]].clone();
            parts[k].push((c.clone(), m));
        }
        let ring = self.q.ambient();
        parts.into_iter().map(|t| ring.from_terms(t)).collect()
    }

    /// Coordinates of a homogeneous vector of polynomials of degree `j`;
    /// entries are reduced first.
    pub fn from_polynomials(&self, shifts: &[i64], j: i64, entries: &[Polynomial<K>]) -> SparseVec<K::Elem> {
        let offs = self.offsets(shifts, j);
        let mut out = Vec::new();
        for (k, e) in entries.iter().enumerate() {
            let r = self.q.reduce(e);
            if r.is_zero() {
                continue;
            }
            for (i, c) in self.coordinates(&r, (j - shifts[k]) as usize) {
                out.push((offs[k] + i, c));
            }
        }
        out
    }
}
