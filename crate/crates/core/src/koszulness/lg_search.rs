//! Enumerating quadratic monomial ideals with a prescribed h-polynomial.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::{monomial_numerator, HilbertSeries};
use crate::poly::Monomial;

/// A monomial ideal up to permutation of the variables, in canonical form:
/// the least sorted list of exponent vectors over all relabelings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalIdeal {
    pub nvars: usize,
    pub gens: Vec<Vec<u16>>,
}

impl CanonicalIdeal {
    pub fn monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| Monomial::new(g.iter().copied())).collect()
    }
}

impl fmt::Display for CanonicalIdeal {
    /// Variables are written `a, b, c, ...` (then `x26, x27, ...`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars)
            .map(|i| {
                if i < 26 {
                    ((b'a' + i as u8) as char).to_string()
                } else {
                    format!("x{i}")
                }
            })
            .collect();
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let mut s = String::new();
            Monomial::new(g.iter().copied()).fmt_with(&names, &mut s)?;
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Canonical form of the monomial ideal generated by `gens` (assumed
/// minimal) in `nvars` variables.
///
/// Variables are first grouped by an invariant (their sorted exponent
/// profile across generators); only permutations within groups are
/// searched, placing groups in a fixed order.
pub fn canonical_form(gens: &[Monomial], nvars: usize) -> CanonicalIdeal {
    let exps: Vec<Vec<u16>> = gens.iter().map(|g| g.exps().to_vec()).collect();
    let profile = |v: usize| -> Vec<u16> {
        let mut p: Vec<u16> = exps.iter().map(|e| e[v]).collect();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    };
    let mut vars: Vec<(Vec<u16>, usize)> = (0..nvars).map(|v| (profile(v), v)).collect();
    vars.sort();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (k, (p, v)) in vars.iter().enumerate() {
        if k > 0 && vars[k - 1].0 == *p {
            groups.last_mut().expect("nonempty").push(*v);
        } else {
            groups.push(vec![*v]);
        }
    }
    // slot[old variable] = new position.
    let mut slot = vec![0usize; nvars];
    let mut best: Option<Vec<Vec<u16>>> = None;
    search(&groups, 0, 0, &mut slot, &exps, nvars, &mut best);
    CanonicalIdeal {
        nvars,
        gens: best.unwrap_or_default(),
    }
}

fn search(
    groups: &[Vec<usize>],
    g: usize,
    base: usize,
    slot: &mut [usize],
    exps: &[Vec<u16>],
    nvars: usize,
    best: &mut Option<Vec<Vec<u16>>>,
) {
    if g == groups.len() {
        let mut image: Vec<Vec<u16>> = exps
            .iter()
            .map(|e| {
                let mut out = vec![0u16; nvars];
                for (v, &x) in e.iter().enumerate() {
                    out[slot[v]] = x;
                }
                out
            })
            .collect();
        image.sort();
        if best.as_ref().is_none_or(|b| image < *b) {
            *best = Some(image);
        }
        return;
    }
    let group = &groups[g];
    let mut order: Vec<usize> = (0..group.len()).collect();
    permute(&mut order, 0, &mut |perm| {
        for (k, &p) in perm.iter().enumerate() {
            slot[group[k]] = base + p;
        }
        search(groups, g + 1, base + group.len(), slot, exps, nvars, best);
    });
}

fn permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Results for one number of variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LgLevel {
    pub nvars: usize,
    /// Canonical forms, sorted, every variable occurring in some generator.
    pub ideals: Vec<CanonicalIdeal>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LgSearchResult {
    pub h: Vec<i64>,
    pub codimension: usize,
    pub quadrics: usize,
    pub levels: Vec<LgLevel>,
    /// Whether every possible number of variables was covered: an ideal
    /// of codimension `c` with `q` quadratic generators involves at most
    /// `c + q` variables.
    pub exhaustive: bool,
}

impl LgSearchResult {
    pub fn all_ideals(&self) -> impl Iterator<Item = &CanonicalIdeal> {
        self.levels.iter().flat_map(|l| &l.ideals)
    }

    /// No quadratic monomial ideal has this h-polynomial, for any number of
    /// variables: a ring with this h-polynomial is not LG-quadratic.
    pub fn obstructed(&self) -> bool {
        self.exhaustive && self.all_ideals().next().is_none()
    }
}

fn combinations(n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, visit);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), visit);
    }
}

/// Quadratic monomial ideals in `h_1 + k` variables (`k <= max_extra_vars`)
/// whose quotient has h-polynomial `h`, up to permutation, using every
/// variable.
///
/// Such an ideal has codimension `h_1` and `C(h_1 + 1, 2) - h_2` generators.
/// A minimal prime of height `h_1` is generated by variables, so the
/// generators may be taken of the form `p * x` with `p` among the first
/// `h_1` variables.
pub fn lg_obstruction_search(h: &[i64], max_extra_vars: usize) -> Result<LgSearchResult> {
    if h.first() != Some(&1) {
        return Err(Error::InvalidArgument("h-polynomial must have constant term 1".into()));
    }
    let h1 = h.get(1).copied().unwrap_or(0);
    let h2 = h.get(2).copied().unwrap_or(0);
    if h1 < 0 {
        return Err(Error::InvalidArgument(format!("negative h_1 = {h1}")));
    }
    let c = h1 as usize;
    let max = (c * (c + 1) / 2) as i64;
    if h2 > max {
        return Err(Error::NoCandidateCount { h2, max });
    }
    let quadrics = (max - h2) as usize;
    let mut levels = Vec::new();
    for k in 0..=max_extra_vars {
        let n = c + k;
        let target = HilbertSeries::new(h.to_vec(), k);
        let mut candidates: Vec<Monomial> = Vec::new();
        for p in 0..c {
            for x in p..n {
                let mut e = vec![0u16; n];
                e[p] += 1;
                e[x] += 1;
                candidates.push(Monomial::new(e));
            }
        }
        let mut subsets: Vec<Vec<usize>> = Vec::new();
        combinations(candidates.len(), quadrics, &mut |s| subsets.push(s.to_vec()));
        let mut found: Vec<CanonicalIdeal> = subsets
            .par_iter()
            .filter_map(|s| {
                let gens: Vec<Monomial> = s.iter().map(|&i| candidates[i].clone()).collect();
                let used = gens.iter().fold(0u64, |acc, g| acc | g.support_mask());
                if n > 0 && used.count_ones() as usize != n {
                    return None;
                }
                let series = HilbertSeries::new(monomial_numerator(&gens), n);
                (series == target).then(|| canonical_form(&gens, n))
            })
            .collect();
        found.sort();
        found.dedup();
        levels.push(LgLevel { nvars: n, ideals: found });
    }
    Ok(LgSearchResult {
        h: h.to_vec(),
        codimension: c,
        quadrics,
        levels,
        exhaustive: max_extra_vars >= quadrics,
    })
}
