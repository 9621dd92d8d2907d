use std::fmt;

use smallvec::SmallVec;

/// Exponent type. Degrees in this crate stay tiny; products are checked.
pub type Exponent = u16;

/// A monomial `x^a`, stored as its exponent vector together with its total
/// degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 12]>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = Exponent>) -> Self {
        let exps: SmallVec<[Exponent; 12]> = exps.into_iter().collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    /// The monomial `x_i^e` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize, e: Exponent) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = e;
        m.degree = e as u32;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> Exponent {
        self.exps[i]
    }

    /// Total (standard) degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Indices of the variables that occur in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Bitmask of occurring variables (variable `i` maps to bit `i mod 64`),
    /// used to reject divisibility tests quickly.
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    /// Product. Panics on exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(b, a)| b - a).collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multidegree under a grading matrix given by rows.
    pub fn multidegree(&self, rows: &[Vec<i64>]) -> Vec<i64> {
        rows.iter()
            .map(|row| row.iter().zip(&self.exps).map(|(w, &e)| w * e as i64).sum())
            .collect()
    }

    /// Weighted degree `sum w_i a_i`.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        weights.iter().zip(&self.exps).map(|(w, &e)| w * e as i64).sum()
    }

    /// Renames variables: variable `i` of `self` becomes variable `map[i]`
    /// of a ring with `nvars` variables.
    pub fn relabel(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut exps: SmallVec<[Exponent; 12]> = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                exps[map[i]] += e;
            }
        }
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    /// Writes the monomial with the given variable names, `1` for the unit.
    pub fn fmt_with(&self, names: &[String], f: &mut dyn fmt::Write) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", names[i])?;
            } else {
                write!(f, "{}^{}", names[i], e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_quotient() {
        let a = Monomial::new([1, 0, 2]);
        let b = Monomial::new([2, 1, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Some(Monomial::new([1, 1, 0])));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.gcd(&b), a);
        assert_eq!(b.degree(), 5);
    }

    #[test]
    fn coprime() {
        assert!(Monomial::new([1, 0]).is_coprime(&Monomial::new([0, 3])));
        assert!(!Monomial::new([1, 1]).is_coprime(&Monomial::new([0, 3])));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_checked() {
        let a = Monomial::new([u16::MAX]);
        let _ = a.mul(&Monomial::new([1]));
    }
}
