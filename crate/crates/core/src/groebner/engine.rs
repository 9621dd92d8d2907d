//! Buchberger's algorithm.
//!
//! The engine works on polynomials of a [`PolynomialRing`] whose first
//! `ncomp` variables may be reserved as *component slots*: an element of a
//! free module `S^r` is stored as a polynomial in which every term has
//! exactly one component slot equal to 1. Divisibility, lcm and quotients of
//! such terms are then the ordinary monomial operations, provided pairs are
//! only formed between elements with the same leading component and the
//! product criterion is switched off. With `ncomp = 0` this is plain
//! Buchberger on ideals.
//!
//! Input generators are fed through the same queue as S-pairs, ordered by
//! sugar with pairs first. For homogeneous input this means a generator of
//! degree `d` is reduced against a basis that is complete through degree
//! `d`, so it survives reduction exactly when it is not in the ideal
//! generated by the generators before it: the surviving generators form a
//! minimal generating set.

use std::collections::BTreeMap;

use crate::poly::{merge_scaled, Field, Monomial, Polynomial, PolynomialRing};

#[derive(Clone, Debug, Default)]
pub(crate) struct EngineConfig {
    /// Number of leading component slots.
    pub ncomp: usize,
    /// Stop once every remaining pair and generator has sugar above this.
    pub degree_bound: Option<i64>,
}

pub(crate) struct EngineOutput<K: Field> {
    /// Reduced basis: monic, sorted by increasing leading monomial.
    pub basis: Vec<Polynomial<K>>,
    /// Indices of input generators that did not reduce to zero on arrival.
    pub minimal: Vec<usize>,
    /// `false` if something was skipped because of the degree bound.
    pub complete: bool,
}

struct Element<K: Field> {
    poly: Polynomial<K>,
    lm: Monomial,
    mask: u64,
    sugar: i64,
    comp: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct QueueKey {
    sugar: i64,
    /// 0 for S-pairs, 1 for input generators.
    kind: u8,
    lcm_degree: u32,
    seq: u64,
}

enum Item {
    Pair { i: usize, j: usize, lcm: Monomial },
    Generator(usize),
}

struct Engine<'a, K: Field> {
    ring: &'a PolynomialRing<K>,
    ncomp: usize,
    elems: Vec<Element<K>>,
    /// Elements whose leading monomials form the current minimal set.
    active: Vec<usize>,
    queue: BTreeMap<QueueKey, Item>,
    seq: u64,
}

fn component(m: &Monomial, ncomp: usize) -> Option<usize> {
    (0..ncomp).find(|&i| m.exp(i) > 0)
}

impl<'a, K: Field> Engine<'a, K> {
    fn new(ring: &'a PolynomialRing<K>, ncomp: usize) -> Self {
        Engine {
            ring,
            ncomp,
            elems: Vec::new(),
            active: Vec::new(),
            queue: BTreeMap::new(),
            seq: 0,
        }
    }

    fn next_seq(&mut self) -> u64 {
        self.seq += 1;
        self.seq
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> i64 {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let da = self.ring.sugar(&a.lm.quotient_of(lcm).expect("lcm"));
        let db = self.ring.sugar(&b.lm.quotient_of(lcm).expect("lcm"));
        (a.sugar + da).max(b.sugar + db)
    }

    fn coprime(&self, a: &Monomial, b: &Monomial) -> bool {
        self.ncomp == 0 && a.is_coprime(b)
    }

    /// Inserts a new basis element and updates the pair set with the
    /// Gebauer-Moeller criteria.
    fn insert(&mut self, poly: Polynomial<K>, sugar: i64) {
        let lm = poly.leading_monomial().expect("nonzero").clone();
        let comp = component(&lm, self.ncomp);
        let h = self.elems.len();
        self.elems.push(Element {
            mask: lm.support_mask(),
            lm: lm.clone(),
            poly,
            sugar,
            comp,
        });

        // Candidate pairs (h, g) for active g with the same component.
        let mut cands: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .copied()
            .filter(|&g| self.elems[g].comp == comp)
            .map(|g| (g, lm.lcm(&self.elems[g].lm)))
            .collect();

        // Criterion M/F: drop (h, g1) if some other (h, g2) has an lcm
        // properly dividing it, or an equal lcm and an earlier position.
        let mut keep = vec![true; cands.len()];
        for a in 0..cands.len() {
            if self.coprime(&lm, &self.elems[cands[a].0].lm) {
                continue;
            }
            for b in 0..cands.len() {
                if a == b || !keep[b] {
                    continue;
                }
                let (la, lb) = (&cands[a].1, &cands[b].1);
                if lb.divides(la) && (lb != la || b < a) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // A coprime pair kills every other pair with the same lcm, and is
        // itself unnecessary (product criterion).
        let mut pruned = Vec::new();
        for (a, (g, l)) in cands.drain(..).enumerate() {
            if !keep[a] {
                continue;
            }
            pruned.push((g, l));
        }
        let coprime_lcms: Vec<Monomial> = pruned
            .iter()
            .filter(|(g, _)| self.coprime(&lm, &self.elems[*g].lm))
            .map(|(_, l)| l.clone())
            .collect();
        let new_pairs: Vec<(usize, Monomial)> = pruned
            .into_iter()
            .filter(|(_, l)| !coprime_lcms.contains(l))
            .collect();

        // Criterion B on old pairs.
        let mask = self.elems[h].mask;
        let doomed: Vec<QueueKey> = self
            .queue
            .iter()
            .filter_map(|(key, item)| match item {
                Item::Pair { i, j, lcm } => {
                    if mask & !lcm.support_mask() != 0 || !lm.divides(lcm) {
                        return None;
                    }
                    let li = lm.lcm(&self.elems[*i].lm);
                    let lj = lm.lcm(&self.elems[*j].lm);
                    if &li != lcm && &lj != lcm {
                        Some(*key)
                    } else {
                        None
                    }
                }
                Item::Generator(_) => None,
            })
            .collect();
        for key in doomed {
            self.queue.remove(&key);
        }

        for (g, lcm) in new_pairs {
            let sugar = self.pair_sugar(g, h, &lcm);
            let key = QueueKey {
                sugar,
                kind: 0,
                lcm_degree: lcm.degree(),
                seq: self.next_seq(),
            };
            self.queue.insert(key, Item::Pair { i: g, j: h, lcm });
        }

        self.active.retain(|&g| !lm.divides(&self.elems[g].lm));
        self.active.push(h);
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Polynomial<K> {
        let field = self.ring.field();
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let qa = a.lm.quotient_of(lcm).expect("lcm");
        let qb = b.lm.quotient_of(lcm).expect("lcm");
        // Both elements are monic.
        let one = field.one();
        let fa = a.poly.mul_term(&one, &qa);
        fa.add_scaled(&field.neg(&one), &qb, &b.poly)
    }

    fn reducers(&self) -> Vec<(&Monomial, u64, &Polynomial<K>)> {
        self.active
            .iter()
            .map(|&g| {
                let e = &self.elems[g];
                (&e.lm, e.mask, &e.poly)
            })
            .collect()
    }
}

/// Full reduction of `f` by monic `reducers`, given as (leading monomial,
/// support mask, polynomial). The result has no term divisible by any
/// leading monomial.
pub(crate) fn reduce_full<K: Field>(
    ring: &PolynomialRing<K>,
    f: Polynomial<K>,
    reducers: &[(&Monomial, u64, &Polynomial<K>)],
) -> Polynomial<K> {
    let field = ring.field();
    let mut done: Vec<(K::Elem, Monomial)> = Vec::new();
    let mut rest = f.into_terms();
    let mut start = 0;
    while start < rest.len() {
        let (c, m) = &rest[start];
        let tmask = m.support_mask();
        let hit = reducers
            .iter()
            .find(|(lm, mask, _)| mask & !tmask == 0 && lm.divides(m));
        match hit {
            Some((lm, _, g)) => {
                let q = lm.quotient_of(m).expect("divides");
                let c = field.neg(c);
                rest = merge_scaled(ring, &rest[start..], &c, &q, g.terms());
                start = 0;
            }
            None => {
                done.push(rest[start].clone());
                start += 1;
            }
        }
    }
    ring.from_sorted_parts(done)
}

/// Reduction of the leading term only (repeatedly), returning the first
/// polynomial whose leading monomial is irreducible.
fn reduce_top<K: Field>(
    ring: &PolynomialRing<K>,
    f: Polynomial<K>,
    reducers: &[(&Monomial, u64, &Polynomial<K>)],
) -> Polynomial<K> {
    let field = ring.field();
    let mut rest = f.into_terms();
    while let Some((c, m)) = rest.first() {
        let tmask = m.support_mask();
        let hit = reducers
            .iter()
            .find(|(lm, mask, _)| mask & !tmask == 0 && lm.divides(m));
        match hit {
            Some((lm, _, g)) => {
                let q = lm.quotient_of(m).expect("divides");
                let c = field.neg(c);
                rest = merge_scaled(ring, &rest, &c, &q, g.terms());
            }
            None => break,
        }
    }
    ring.from_sorted_parts(rest)
}

pub(crate) fn buchberger<K: Field>(
    ring: &PolynomialRing<K>,
    gens: &[Polynomial<K>],
    cfg: &EngineConfig,
) -> EngineOutput<K> {
    let mut engine = Engine::new(ring, cfg.ncomp);
    let mut complete = true;
    for (idx, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let sugar = g.sugar();
        let key = QueueKey {
            sugar,
            kind: 1,
            lcm_degree: g.leading_monomial().map_or(0, Monomial::degree),
            seq: engine.next_seq(),
        };
        engine.queue.insert(key, Item::Generator(idx));
    }

    let mut minimal = Vec::new();
    while let Some((key, item)) = engine.queue.pop_first() {
        if let Some(bound) = cfg.degree_bound {
            if key.sugar > bound {
                complete = false;
                break;
            }
        }
        let (poly, is_gen) = match item {
            Item::Pair { i, j, lcm } => (engine.spoly(i, j, &lcm), None),
            Item::Generator(idx) => (gens[idx].clone(), Some(idx)),
        };
        let reduced = {
            let reducers = engine.reducers();
            let top = reduce_top(ring, poly, &reducers);
            if top.is_zero() {
                top
            } else {
                reduce_full(ring, top, &reducers)
            }
        };
        if reduced.is_zero() {
            continue;
        }
        if let Some(idx) = is_gen {
            minimal.push(idx);
        }
        let sugar = key.sugar.max(reduced.sugar());
        engine.insert(reduced.monic(), sugar);
    }

    let basis = interreduce(ring, engine.active.iter().map(|&g| engine.elems[g].poly.clone()).collect());
    EngineOutput {
        basis,
        minimal,
        complete,
    }
}

/// Reduced form of a set of monic polynomials whose leading monomials are
/// pairwise non-dividing (or arbitrary: redundant ones are dropped).
pub(crate) fn interreduce<K: Field>(
    ring: &PolynomialRing<K>,
    mut polys: Vec<Polynomial<K>>,
) -> Vec<Polynomial<K>> {
    polys.retain(|p| !p.is_zero());
    polys.sort_by(|a, b| {
        ring.compare(
            a.leading_monomial().expect("nonzero"),
            b.leading_monomial().expect("nonzero"),
        )
    });
    // Drop elements whose leading monomial is divisible by an earlier
    // (smaller) one.
    let mut kept: Vec<Polynomial<K>> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().expect("nonzero");
        if kept
            .iter()
            .any(|q| q.leading_monomial().expect("nonzero").divides(lm))
        {
            continue;
        }
        kept.push(p.monic());
    }
    let lms: Vec<(Monomial, u64)> = kept
        .iter()
        .map(|p| {
            let lm = p.leading_monomial().expect("nonzero").clone();
            let mask = lm.support_mask();
            (lm, mask)
        })
        .collect();
    let mut out = Vec::with_capacity(kept.len());
    for (k, p) in kept.iter().enumerate() {
        let others: Vec<(&Monomial, u64, &Polynomial<K>)> = kept
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(l, q)| (&lms[l].0, lms[l].1, q))
            .collect();
        let mut terms = p.terms().to_vec();
        let head = terms.remove(0);
        let tail = reduce_full(ring, ring.from_sorted_parts(terms), &others);
        let mut all = vec![head];
        all.extend(tail.into_terms());
        out.push(ring.from_sorted_parts(all));
    }
    out
}

/// Checks Buchberger's criterion: every S-polynomial of two elements with
/// the same leading component reduces to zero.
pub(crate) fn is_groebner<K: Field>(
    ring: &PolynomialRing<K>,
    basis: &[Polynomial<K>],
    ncomp: usize,
) -> bool {
    let field = ring.field();
    let monic: Vec<Polynomial<K>> = basis.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    let lms: Vec<(Monomial, u64)> = monic
        .iter()
        .map(|p| {
            let lm = p.leading_monomial().expect("nonzero").clone();
            let mask = lm.support_mask();
            (lm, mask)
        })
        .collect();
    let reducers: Vec<(&Monomial, u64, &Polynomial<K>)> =
        monic.iter().zip(&lms).map(|(p, (lm, mask))| (lm, *mask, p)).collect();
    for i in 0..monic.len() {
        for j in i + 1..monic.len() {
            let (a, b) = (&lms[i].0, &lms[j].0);
            if component(a, ncomp) != component(b, ncomp) {
                continue;
            }
            let lcm = a.lcm(b);
            let qa = a.quotient_of(&lcm).expect("lcm");
            let qb = b.quotient_of(&lcm).expect("lcm");
            let s = monic[i]
                .mul_term(&field.one(), &qa)
                .add_scaled(&field.neg(&field.one()), &qb, &monic[j]);
            if !reduce_full(ring, s, &reducers).is_zero() {
                return false;
            }
        }
    }
    true
}
