//! Derived ideal operations: elimination, kernels of algebra maps,
//! intersection, colon, equality. Every ideal returned here is given by its
//! reduced Groebner basis under the ring's order.

use super::engine::{buchberger, EngineConfig};
use super::ideal::{homogeneous_degree, Ideal};
use crate::error::{Error, PolyError, Result};
use crate::poly::{Field, MonomialOrder, Polynomial, PolynomialRing};

/// Replaces the generators by the reduced Groebner basis.
pub fn reduced<K: Field>(ideal: &Ideal<K>) -> Ideal<K> {
    let gb = ideal.groebner_basis();
    Ideal::new(ideal.ring(), gb.elements().to_vec()).expect("same ring")
}

/// Basis of `gens` in a ring whose first `nelim` variables form an
/// eliminated block, keeping the elements free of those variables.
fn eliminate_leading_block<K: Field>(
    ring: &PolynomialRing<K>,
    gens: &[Polynomial<K>],
    nelim: usize,
) -> Vec<Polynomial<K>> {
    let out = buchberger(ring, gens, &EngineConfig::default());
    out.basis
        .into_iter()
        .filter(|g| g.terms().iter().all(|(_, m)| (0..nelim).all(|i| m.exp(i) == 0)))
        .collect()
}

/// `I ∩ K[keep]`, returned as an ideal of the subring on the `keep`
/// variables (in the given order, with the inherited grading and
/// degrevlex).
pub fn eliminate<K: Field>(ideal: &Ideal<K>, keep: &[usize]) -> Result<Ideal<K>> {
    ideal.require_homogeneous()?;
    let ring = ideal.ring();
    let n = ring.nvars();
    if let Some(&bad) = keep.iter().find(|&&i| i >= n) {
        return Err(Error::InvalidArgument(format!("variable index {bad} out of range")));
    }
    let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    let perm: Vec<usize> = elim.iter().chain(keep).copied().collect();
    let mut pos = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }
    let names: Vec<String> = perm.iter().map(|&i| ring.names()[i].clone()).collect();
    let grading: Vec<Vec<i64>> = ring
        .grading()
        .iter()
        .map(|row| perm.iter().map(|&i| row[i]).collect())
        .collect();
    let weights: Vec<i64> = perm.iter().map(|&i| ring.sugar_weights()[i]).collect();
    let big = PolynomialRing::raw(
        ring.field().clone(),
        names,
        grading.clone(),
        MonomialOrder::elimination(elim.len()),
        weights,
    );
    let gens: Vec<Polynomial<K>> = ideal.gens().iter().map(|g| g.relabel(&big, &pos)).collect();
    let kept = eliminate_leading_block(&big, &gens, elim.len());

    let sub_names: Vec<String> = keep.iter().map(|&i| ring.names()[i].clone()).collect();
    let sub_grading: Vec<Vec<i64>> = ring
        .grading()
        .iter()
        .map(|row| keep.iter().map(|&i| row[i]).collect())
        .collect();
    let sub = PolynomialRing::new(ring.field().clone(), sub_names)?.with_grading(sub_grading)?;
    let back: Vec<usize> = (0..n)
        .map(|i| i.saturating_sub(elim.len()))
        .collect();
    let out: Vec<Polynomial<K>> = kept.iter().map(|g| g.relabel(&sub, &back)).collect();
    Ok(reduced(&Ideal::new(&sub, out)?))
}

/// Kernel of `K[source] -> S/(relations)`, `T_j -> targets[j]`, computed by
/// eliminating the variables of `S` from the graph ideal
/// `(T_j - targets[j]) + relations`.
///
/// The source ring has the given variable names and, if supplied, the
/// given grading; otherwise every source variable has degree 1.
pub fn kernel_of_map<K: Field>(
    targets: &[Polynomial<K>],
    relations: &[Polynomial<K>],
    source_names: &[String],
    source_grading: Option<Vec<Vec<i64>>>,
) -> Result<Ideal<K>> {
    if targets.len() != source_names.len() {
        return Err(PolyError::LengthMismatch(targets.len(), source_names.len()).into());
    }
    let Some(first) = targets.first() else {
        return Err(Error::InvalidArgument("no target expressions".into()));
    };
    let s = first.ring().clone();
    if targets.iter().chain(relations).any(|t| !t.ring().same(&s)) {
        return Err(PolyError::RingMismatch.into());
    }
    let mut degs = Vec::with_capacity(targets.len());
    for t in targets {
        if t.is_zero() {
            return Err(Error::InvalidArgument("zero target expression".into()));
        }
        degs.push(homogeneous_degree(t)?);
    }
    for r in relations {
        homogeneous_degree(r)?;
    }
    let n = s.nvars();
    let k = targets.len();
    let mut names: Vec<String> = s.names().to_vec();
    for name in source_names {
        if names.contains(name) {
            return Err(PolyError::InvalidVariableName(name.clone()).into());
        }
        names.push(name.clone());
    }
    let grading: Vec<Vec<i64>> = s
        .grading()
        .iter()
        .enumerate()
        .map(|(r, row)| row.iter().copied().chain(degs.iter().map(|d| d[r])).collect())
        .collect();
    let mut weights: Vec<i64> = s.sugar_weights().to_vec();
    weights.extend(degs.iter().map(|d| d.iter().sum::<i64>().max(1)));
    let graph_ring = PolynomialRing::raw(
        s.field().clone(),
        names,
        grading,
        MonomialOrder::Block {
            split: n,
            first: Box::new(MonomialOrder::DegRevLex),
            second: Box::new(MonomialOrder::Weight {
                weights: degs.iter().map(|d| d.iter().sum::<i64>().max(1)).collect(),
                tiebreak: Box::new(MonomialOrder::DegRevLex),
            }),
        },
        weights,
    );
    let embed: Vec<usize> = (0..n).collect();
    let mut gens = Vec::with_capacity(k + relations.len());
    for (j, t) in targets.iter().enumerate() {
        let tj = graph_ring.var(n + j);
        gens.push(&tj - &t.relabel(&graph_ring, &embed));
    }
    for r in relations {
        gens.push(r.relabel(&graph_ring, &embed));
    }
    let kept = eliminate_leading_block(&graph_ring, &gens, n);

    let grading = source_grading.unwrap_or_else(|| vec![vec![1; k]]);
    let source = PolynomialRing::new(s.field().clone(), source_names.to_vec())?.with_grading(grading)?;
    let back: Vec<usize> = (0..n + k).map(|i| i.saturating_sub(n)).collect();
    let out: Vec<Polynomial<K>> = kept.iter().map(|g| g.relabel(&source, &back)).collect();
    Ok(reduced(&Ideal::new(&source, out)?))
}

/// Kernel of `K[source] -> S`, `T_j -> targets[j]`.
pub fn algebra_map_kernel<K: Field>(
    targets: &[Polynomial<K>],
    source_names: &[String],
    source_grading: Option<Vec<Vec<i64>>>,
) -> Result<Ideal<K>> {
    kernel_of_map(targets, &[], source_names, source_grading)
}

/// `I ∩ J` via `t I + (1 - t) J` and elimination of `t`.
pub fn ideal_intersection<K: Field>(i: &Ideal<K>, j: &Ideal<K>) -> Result<Ideal<K>> {
    let ring = i.ring();
    if !ring.same(j.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let n = ring.nvars();
    let mut names = vec!["__tag".to_string()];
    names.extend(ring.names().iter().cloned());
    let grading: Vec<Vec<i64>> = ring
        .grading()
        .iter()
        .map(|row| std::iter::once(0).chain(row.iter().copied()).collect())
        .collect();
    let mut weights = vec![1];
    weights.extend_from_slice(ring.sugar_weights());
    let big = PolynomialRing::raw(
        ring.field().clone(),
        names,
        grading,
        MonomialOrder::Block {
            split: 1,
            first: Box::new(MonomialOrder::DegRevLex),
            second: Box::new(ring.order().clone()),
        },
        weights,
    );
    let shift: Vec<usize> = (1..=n).collect();
    let t = big.var(0);
    let one_minus_t = &big.one() - &t;
    let mut gens = Vec::new();
    for f in i.gens() {
        gens.push(&t * &f.relabel(&big, &shift));
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.relabel(&big, &shift));
    }
    let kept = eliminate_leading_block(&big, &gens, 1);
    let back: Vec<usize> = (0..=n).map(|k| k.saturating_sub(1)).collect();
    let out: Vec<Polynomial<K>> = kept.iter().map(|g| g.relabel(ring, &back)).collect();
    Ok(reduced(&Ideal::new(ring, out)?))
}

/// `J : f = (J ∩ (f)) / f`.
pub fn colon_by_element<K: Field>(j: &Ideal<K>, f: &Polynomial<K>) -> Result<Ideal<K>> {
    let ring = j.ring();
    if !f.ring().same(ring) {
        return Err(PolyError::RingMismatch.into());
    }
    if f.is_zero() || j.groebner_basis().contains(f) {
        return Ok(Ideal::unit(ring));
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let inter = ideal_intersection(j, &principal)?;
    let quotients: Vec<Polynomial<K>> = inter
        .gens()
        .iter()
        .map(|g| g.div_exact(f).expect("element of (f) is divisible by f"))
        .collect();
    Ok(reduced(&Ideal::new(ring, quotients)?))
}

/// `J : I = {r : r I ⊆ J}` in the polynomial ring, as the intersection of
/// the colons by the generators of `I`.
pub fn ideal_colon<K: Field>(j: &Ideal<K>, i: &Ideal<K>) -> Result<Ideal<K>> {
    if !j.ring().same(i.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    let mut acc: Option<Ideal<K>> = None;
    for f in i.gens() {
        let c = colon_by_element(j, f)?;
        acc = Some(match acc {
            None => c,
            Some(a) => ideal_intersection(&a, &c)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(j.ring())))
}

/// Equality of ideals: identical reduced Groebner bases.
pub fn ideal_equal<K: Field>(i: &Ideal<K>, j: &Ideal<K>) -> Result<bool> {
    if !i.ring().same(j.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    Ok(i.groebner_basis().elements() == j.groebner_basis().elements())
}

/// Whether every generator of `i` lies in `j`.
pub fn ideal_contained<K: Field>(i: &Ideal<K>, j: &Ideal<K>) -> Result<bool> {
    if !i.ring().same(j.ring()) {
        return Err(PolyError::RingMismatch.into());
    }
    let gb = j.groebner_basis();
    Ok(i.gens().iter().all(|f| gb.contains(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolynomialRing;

    fn ring(names: &[&str]) -> PolynomialRing {
        PolynomialRing::rationals(names).unwrap()
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn conic_by_elimination() {
        let r = ring(&["x", "y", "T0", "T1", "T2"]);
        let i = Ideal::parse(&r, &["T0 - x^2", "T1 - x*y", "T2 - y^2"])
            .unwrap()
            .to_ring(&r.with_grading(vec![vec![1, 1, 2, 2, 2]]).unwrap());
        let k = eliminate(&i, &[2, 3, 4]).unwrap();
        assert_eq!(k.gens().len(), 1);
        let expected = k.ring().parse("T1^2 - T0*T2").unwrap();
        assert!(k.groebner_basis().contains(&expected));
        assert!(Ideal::new(k.ring(), vec![expected]).unwrap().contains(&k.gens()[0]));
    }

    #[test]
    fn eliminate_nothing() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^2 - y*z", "y^2 - x*z"]).unwrap();
        let e = eliminate(&i, &[0, 1, 2]).unwrap();
        assert_eq!(e.gens(), i.groebner_basis().elements());
    }

    #[test]
    fn coordinate_map_has_zero_kernel() {
        let s = ring(&["x", "y"]);
        let k = algebra_map_kernel(&s.parse_all(&["x", "y"]).unwrap(), &names(&["u", "v"]), None).unwrap();
        assert!(k.is_zero());
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let x = Ideal::parse(&r, &["x"]).unwrap();
        let y = Ideal::parse(&r, &["y"]).unwrap();
        let xy = Ideal::parse(&r, &["x*y"]).unwrap();
        assert!(ideal_equal(&ideal_intersection(&x, &y).unwrap(), &xy).unwrap());
        let a = Ideal::parse(&r, &["x^2", "x*y"]).unwrap();
        assert!(ideal_equal(&ideal_intersection(&a, &y).unwrap(), &xy).unwrap());
        assert!(ideal_equal(&ideal_intersection(&a, &a).unwrap(), &a).unwrap());
    }

    #[test]
    fn colons() {
        let r = ring(&["x", "y"]);
        let j = Ideal::parse(&r, &["x*y"]).unwrap();
        let c = ideal_colon(&j, &Ideal::parse(&r, &["x"]).unwrap()).unwrap();
        assert!(ideal_equal(&c, &Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        let unit = ideal_colon(&j, &j).unwrap();
        assert!(unit.groebner_basis().is_unit());
    }

    #[test]
    fn equality() {
        let r = ring(&["x", "y"]);
        let a = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = Ideal::parse(&r, &["x + y", "y"]).unwrap();
        assert!(ideal_equal(&a, &b).unwrap());
        let c = Ideal::parse(&r, &["x"]).unwrap();
        let d = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(!ideal_equal(&c, &d).unwrap());
    }
}
