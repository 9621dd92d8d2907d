//! Graded free modules over a polynomial ring, submodules and syzygies.
//!
//! A vector `(f_1, ..., f_r)` is encoded for the Groebner engine as the
//! polynomial `sum e_k f_k` in a ring whose first `r` variables are the
//! component slots `e_k` (see the engine docs).

use super::engine::{buchberger, EngineConfig};
use crate::error::{Error, PolyError, Result};
use crate::poly::{Field, Monomial, MonomialOrder, Polynomial, PolynomialRing, Rationals};

/// `⊕_k S(-shifts[k])`. Degrees are measured with the ring's sugar weights,
/// which is the standard degree for standard graded rings.
#[derive(Clone, Debug)]
pub struct FreeModule<K: Field = Rationals> {
    ring: PolynomialRing<K>,
    shifts: Vec<i64>,
}

/// A vector of a free module: one polynomial per component.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleElement<K: Field = Rationals> {
    pub entries: Vec<Polynomial<K>>,
}

impl<K: Field> ModuleElement<K> {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }
}

impl<K: Field> FreeModule<K> {
    pub fn new(ring: &PolynomialRing<K>, shifts: Vec<i64>) -> Self {
        FreeModule {
            ring: ring.clone(),
            shifts,
        }
    }

    pub fn ring(&self) -> &PolynomialRing<K> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// Degree of a homogeneous vector; `None` for zero, error if some
    /// component is inhomogeneous or components disagree.
    pub fn degree_of(&self, v: &ModuleElement<K>) -> Result<Option<i64>> {
        if v.entries.len() != self.rank() {
            return Err(PolyError::LengthMismatch(v.entries.len(), self.rank()).into());
        }
        let mut deg = None;
        for (k, f) in v.entries.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let w = f.ring().sugar(f.leading_monomial().expect("nonzero"));
            if f.terms().iter().any(|(_, m)| f.ring().sugar(m) != w) {
                return Err(Error::Inhomogeneous(f.to_string()));
            }
            let d = self.shifts[k] + w;
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => {
                    return Err(Error::Inhomogeneous(format!("vector with components of degrees {e} and {d}")))
                }
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Basis vector `e_k`.
    pub fn basis_vector(&self, k: usize) -> ModuleElement<K> {
        ModuleElement {
            entries: (0..self.rank())
                .map(|l| if l == k { self.ring.one() } else { self.ring.zero() })
                .collect(),
        }
    }

    pub fn zero_vector(&self) -> ModuleElement<K> {
        ModuleElement {
            entries: vec![self.ring.zero(); self.rank()],
        }
    }
}

/// Ring encoding vectors of `⊕ S(-shifts)` (one slot per shift), ordered by
/// degree, then position, then the ring's order.
fn encoding_ring<K: Field>(ring: &PolynomialRing<K>, shifts: &[i64], order: MonomialOrder) -> PolynomialRing<K> {
    let r = shifts.len();
    let mut names: Vec<String> = (0..r).map(|k| format!("_e{k}")).collect();
    names.extend(ring.names().iter().cloned());
    let mut weights: Vec<i64> = shifts.to_vec();
    weights.extend_from_slice(ring.sugar_weights());
    PolynomialRing::raw(ring.field().clone(), names, vec![weights.clone()], order, weights)
}

fn top_order<K: Field>(ring: &PolynomialRing<K>, shifts: &[i64]) -> MonomialOrder {
    let mut w: Vec<i64> = shifts.to_vec();
    w.extend_from_slice(ring.sugar_weights());
    MonomialOrder::Weight {
        weights: w,
        tiebreak: Box::new(MonomialOrder::Block {
            split: shifts.len(),
            first: Box::new(MonomialOrder::Lex),
            second: Box::new(ring.order().clone()),
        }),
    }
}

/// Writes `v` into the encoding ring, placing component `k` in slot
/// `offset + k`.
fn encode<K: Field>(enc: &PolynomialRing<K>, v: &ModuleElement<K>, offset: usize) -> Polynomial<K> {
    let n = enc.nvars();
    let mut terms = Vec::new();
    for (k, f) in v.entries.iter().enumerate() {
        for (c, m) in f.terms() {
            let mut exps = vec![0u16; n];
            exps[offset + k] = 1;
            let base = n - m.nvars();
            for (i, &e) in m.exps().iter().enumerate() {
                exps[base + i] = e;
            }
            terms.push((c.clone(), Monomial::new(exps)));
        }
    }
    enc.from_terms(terms)
}

/// Reads slots `offset .. offset + rank` back into a vector.
fn decode<K: Field>(ring: &PolynomialRing<K>, p: &Polynomial<K>, offset: usize, rank: usize) -> ModuleElement<K> {
    let n = ring.nvars();
    let base = p.ring().nvars() - n;
    let mut parts: Vec<Vec<(K::Elem, Monomial)>> = vec![Vec::new(); rank];
    for (c, m) in p.terms() {
        let k = (offset..offset + rank)
            .find(|&s| m.exp(s) > 0)
            .expect("term carries a component")
            - offset;
        parts[k].push((c.clone(), Monomial::new(m.exps()[base..].iter().copied())));
    }
    ModuleElement {
        entries: parts.into_iter().map(|t| ring.from_terms(t)).collect(),
    }
}

/// A graded submodule of a free module, given by homogeneous generators.
#[derive(Clone, Debug)]
pub struct Submodule<K: Field = Rationals> {
    ambient: FreeModule<K>,
    gens: Vec<ModuleElement<K>>,
}

impl<K: Field> Submodule<K> {
    /// Zero vectors are dropped; every generator must be homogeneous.
    pub fn new(ambient: &FreeModule<K>, gens: Vec<ModuleElement<K>>) -> Result<Self> {
        let mut kept = Vec::new();
        for g in gens {
            if ambient.degree_of(&g)?.is_some() {
                kept.push(g);
            }
        }
        Ok(Submodule {
            ambient: ambient.clone(),
            gens: kept,
        })
    }

    pub fn ambient(&self) -> &FreeModule<K> {
        &self.ambient
    }

    pub fn gens(&self) -> &[ModuleElement<K>] {
        &self.gens
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.gens
            .iter()
            .map(|g| self.ambient.degree_of(g).expect("checked").expect("nonzero"))
            .collect()
    }

    /// A minimal generating set chosen among the generators, considering
    /// generators of degree at most `bound` (all if `None`).
    pub fn minimal_generators(&self, bound: Option<i64>) -> Submodule<K> {
        let mut order: Vec<usize> = (0..self.gens.len()).collect();
        let degs = self.degrees();
        order.sort_by_key(|&i| degs[i]);
        let order: Vec<usize> = order
            .into_iter()
            .filter(|&i| bound.is_none_or(|b| degs[i] <= b))
            .collect();
        let shifts = self.ambient.shifts.clone();
        let ring = &self.ambient.ring;
        let enc = encoding_ring(ring, &shifts, top_order(ring, &shifts));
        let encoded: Vec<Polynomial<K>> = order.iter().map(|&i| encode(&enc, &self.gens[i], 0)).collect();
        let out = buchberger(
            &enc,
            &encoded,
            &EngineConfig {
                ncomp: shifts.len(),
                degree_bound: bound,
            },
        );
        Submodule {
            ambient: self.ambient.clone(),
            gens: out.minimal.into_iter().map(|k| self.gens[order[k]].clone()).collect(),
        }
    }

    /// Generators of the syzygy module of the generators, as a submodule of
    /// `⊕ S(-deg g_j)`, complete through degree `bound` (all if `None`).
    pub fn syzygies(&self, bound: Option<i64>) -> Submodule<K> {
        self.syzygies_with_status(bound).0
    }

    /// As [`Submodule::syzygies`], also reporting whether the computation
    /// finished without cutting anything at the bound (then the result
    /// generates the whole syzygy module).
    pub fn syzygies_with_status(&self, bound: Option<i64>) -> (Submodule<K>, bool) {
        let ring = &self.ambient.ring;
        let r = self.ambient.rank();
        let degs = self.degrees();
        let m = degs.len();
        let target = FreeModule::new(ring, degs.clone());
        if m == 0 {
            let empty = Submodule {
                ambient: target,
                gens: Vec::new(),
            };
            return (empty, true);
        }
        let mut shifts: Vec<i64> = self.ambient.shifts.clone();
        shifts.extend_from_slice(&degs);
        // Eliminate the first r slots: position over term on them, then
        // degree over position over term on the syzygy part.
        let mut w: Vec<i64> = degs.clone();
        w.extend_from_slice(ring.sugar_weights());
        let order = MonomialOrder::Block {
            split: r,
            first: Box::new(MonomialOrder::Lex),
            second: Box::new(MonomialOrder::Weight {
                weights: w,
                tiebreak: Box::new(MonomialOrder::Block {
                    split: m,
                    first: Box::new(MonomialOrder::Lex),
                    second: Box::new(ring.order().clone()),
                }),
            }),
        };
        let enc = encoding_ring(ring, &shifts, order);
        let n = enc.nvars();
        let gens: Vec<Polynomial<K>> = self
            .gens
            .iter()
            .enumerate()
            .map(|(j, g)| {
                let mut e = vec![0u16; n];
                e[r + j] = 1;
                &encode(&enc, g, 0) + &enc.monomial(Monomial::new(e))
            })
            .collect();
        let out = buchberger(
            &enc,
            &gens,
            &EngineConfig {
                ncomp: r + m,
                degree_bound: bound,
            },
        );
        let syz = out
            .basis
            .into_iter()
            .filter(|p| p.terms().iter().all(|(_, mono)| (0..r).all(|s| mono.exp(s) == 0)))
            .map(|p| decode(ring, &p, r, m))
            .collect();
        let sub = Submodule {
            ambient: target,
            gens: syz,
        };
        (sub, out.complete)
    }

    /// Whether `v` lies in the submodule (exact only if `v`'s degree is at
    /// most `bound` when one is given).
    pub fn contains(&self, v: &ModuleElement<K>) -> Result<bool> {
        let Some(d) = self.ambient.degree_of(v)? else {
            return Ok(true);
        };
        let shifts = self.ambient.shifts.clone();
        let ring = &self.ambient.ring;
        let enc = encoding_ring(ring, &shifts, top_order(ring, &shifts));
        let encoded: Vec<Polynomial<K>> = self.gens.iter().map(|g| encode(&enc, g, 0)).collect();
        let out = buchberger(
            &enc,
            &encoded,
            &EngineConfig {
                ncomp: shifts.len(),
                degree_bound: Some(d),
            },
        );
        let lms: Vec<Monomial> = out.basis.iter().map(|p| p.leading_monomial().expect("nonzero").clone()).collect();
        let masks: Vec<u64> = lms.iter().map(Monomial::support_mask).collect();
        let reducers: Vec<_> = out.basis.iter().enumerate().map(|(i, p)| (&lms[i], masks[i], p)).collect();
        Ok(super::engine::reduce_full(&enc, encode(&enc, v, 0), &reducers).is_zero())
    }
}

/// Applies the map `S^m -> F` sending `e_j` to `images[j]` to a vector.
pub fn apply_map<K: Field>(images: &[ModuleElement<K>], v: &ModuleElement<K>, target: &FreeModule<K>) -> ModuleElement<K> {
    let mut acc = target.zero_vector();
    for (j, c) in v.entries.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, e) in images[j].entries.iter().enumerate() {
            acc.entries[k] = &acc.entries[k] + &(c * e);
        }
    }
    acc
}
