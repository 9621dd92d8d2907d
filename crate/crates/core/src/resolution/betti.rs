use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Which ring the Betti numbers are taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BettiRing {
    /// Over the ambient polynomial ring.
    Polynomial,
    /// Over the quotient ring itself.
    Quotient,
    /// Upper bounds read off a Taylor resolution.
    TaylorBound,
}

/// Graded Betti numbers `beta_{ij}` for `i <= hom_bound` and `j <= deg_bound`.
///
/// A cell is certified when `j < deg_bound`; cells at the bound are kept but
/// flagged. `zero_from` is the first homological index proven to vanish in
/// every degree, when known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
    hom_bound: usize,
    deg_bound: i64,
    over: BettiRing,
    zero_from: Option<usize>,
}

impl BettiTable {
    pub fn new(over: BettiRing, hom_bound: usize, deg_bound: i64) -> Self {
        BettiTable {
            entries: BTreeMap::new(),
            hom_bound,
            deg_bound,
            over,
            zero_from: None,
        }
    }

    pub fn from_entries(
        over: BettiRing,
        hom_bound: usize,
        deg_bound: i64,
        entries: impl IntoIterator<Item = ((usize, i64), u64)>,
    ) -> Self {
        let mut t = Self::new(over, hom_bound, deg_bound);
        for ((i, j), b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: i64, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub(crate) fn set_zero_from(&mut self, i: usize) {
        self.zero_from = Some(i);
    }

    pub fn over(&self) -> BettiRing {
        self.over
    }

    pub fn hom_bound(&self) -> usize {
        self.hom_bound
    }

    pub fn deg_bound(&self) -> i64 {
        self.deg_bound
    }

    pub fn zero_from(&self) -> Option<usize> {
        self.zero_from
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in increasing `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_certified(&self, j: i64) -> bool {
        j < self.deg_bound
    }

    /// Entries sitting at the degree bound.
    pub fn boundary_entries(&self) -> Vec<((usize, i64), u64)> {
        self.entries().filter(|&((_, j), _)| !self.is_certified(j)).collect()
    }

    /// Total rank `beta_i`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).map(|(_, &v)| v).sum()
    }

    /// `t_i`: the largest `j` with `beta_{ij} != 0`.
    pub fn t(&self, i: usize) -> Option<i64> {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).next_back().map(|(&(_, j), _)| j)
    }

    /// The smallest `j` with `beta_{ij} != 0`.
    pub fn lowest_degree(&self, i: usize) -> Option<i64> {
        self.entries.range((i, i64::MIN)..=(i, i64::MAX)).next().map(|(&(_, j), _)| j)
    }

    /// Largest `j - i` over certified entries.
    pub fn regularity(&self) -> Option<i64> {
        self.entries()
            .filter(|&((_, j), _)| self.is_certified(j))
            .map(|((i, j), _)| j - i as i64)
            .max()
    }

    /// Projective dimension, when a vanishing column has been proven.
    pub fn projective_dimension(&self) -> Option<usize> {
        let z = self.zero_from?;
        Some((0..z).rev().find(|&i| self.total(i) > 0).unwrap_or(0))
    }

    /// Whether all entries (certified or not) satisfy `j = i`.
    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|&(i, j)| j == i as i64)
    }

    /// First certified entry off the diagonal `j = i`, in `(i, j)` order.
    pub fn first_off_diagonal(&self) -> Option<((usize, i64), u64)> {
        self.entries().find(|&((i, j), _)| j != i as i64 && self.is_certified(j))
    }

    /// Property `N_p`: `beta_{ij} = 0` for `1 <= i <= p` and `j > i + 1`.
    /// `None` when `p` exceeds the computed range.
    pub fn satisfies_np(&self, p: usize) -> Option<bool> {
        if p > self.hom_bound {
            return None;
        }
        Some(!self.entries.keys().any(|&(i, j)| (1..=p).contains(&i) && j > i as i64 + 1))
    }

    /// `beta_{ii}` for `i = 0..=n`.
    pub fn diagonal(&self, n: usize) -> Vec<u64> {
        (0..=n).map(|i| self.get(i, i as i64)).collect()
    }

    /// Keys `"i,j"` in increasing `(i, j)` order.
    pub fn to_keyed(&self) -> Vec<(String, u64)> {
        self.entries().map(|((i, j), v)| (format!("{i},{j}"), v)).collect()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay-style grid: columns are `i`, rows are `j - i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last_col = self
            .entries
            .keys()
            .map(|&(i, _)| i)
            .max()
            .unwrap_or(0);
        let rows: Vec<i64> = self.entries.keys().map(|&(i, j)| j - i as i64).collect();
        let (lo, hi) = match (rows.iter().min(), rows.iter().max()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => (0, 0),
        };
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut head = vec![String::new()];
        head.extend((0..=last_col).map(|i| i.to_string()));
        grid.push(head);
        let mut total = vec!["total:".to_string()];
        total.extend((0..=last_col).map(|i| self.total(i).to_string()));
        grid.push(total);
        for r in lo..=hi {
            let mut line = vec![format!("{r}:")];
            line.extend((0..=last_col).map(|i| cell(self.get(i, r + i as i64))));
            grid.push(line);
        }
        let ncols = last_col + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| grid.iter().map(|l| l[c].len()).max().unwrap_or(0))
            .collect();
        for (n, line) in grid.iter().enumerate() {
            let mut s = String::new();
            for (c, w) in line.iter().zip(&widths) {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push_str(&format!("{c:>w$}", w = *w));
            }
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "{}", s.trim_end())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_and_invariants() {
        let t = BettiTable::from_entries(BettiRing::Polynomial, 3, 10, [((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]);
        assert_eq!(t.to_string(), "       0 1 2\ntotal: 1 2 1\n    0: 1 . .\n    1: . 2 .\n    2: . . 1");
        assert_eq!(t.t(1), Some(2));
        assert_eq!(t.regularity(), Some(2));
        assert_eq!(t.satisfies_np(1), Some(true));
        assert_eq!(t.satisfies_np(2), Some(false));
        assert_eq!(t.projective_dimension(), None);
        assert_eq!(t.to_keyed()[1], ("1,2".to_string(), 2));
    }
}
