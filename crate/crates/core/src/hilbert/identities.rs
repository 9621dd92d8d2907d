//! Binomial counting identities for products of polynomial rings.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// Both sides of
/// `C(n + b_1 + ... + b_v - 1, n) = sum over c in N^v, |c| = n, of prod C(c_i + b_i - 1, c_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountIdentity {
    #[serde(serialize_with = "as_string")]
    pub left: BigUint,
    #[serde(serialize_with = "as_string")]
    pub right: BigUint,
}

impl CountIdentity {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

fn as_string<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn big_binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Evaluates both sides exactly. The right side is the coefficient of
/// `z^n` in the product of the series `sum_c C(c + b_i - 1, c) z^c`.
///
/// Panics if `b` is empty.
pub fn count_identity(n: u64, b: &[u64]) -> CountIdentity {
    assert!(!b.is_empty(), "count identity needs at least one part");
    let total: u64 = b.iter().sum();
    let left = if n + total == 0 {
        BigUint::one()
    } else {
        big_binomial(n + total - 1, n)
    };
    let len = n as usize + 1;
    let mut acc = vec![BigUint::zero(); len];
    acc[0] = BigUint::one();
    for &bi in b {
        let factor: Vec<BigUint> = (0..len as u64)
            .map(|c| {
                if c + bi == 0 {
                    BigUint::one()
                } else {
                    big_binomial(c + bi - 1, c)
                }
            })
            .collect();
        let mut next = vec![BigUint::zero(); len];
        for (i, x) in acc.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in factor.iter().take(len - i).enumerate() {
                next[i + j] += x * y;
            }
        }
        acc = next;
    }
    CountIdentity {
        left,
        right: acc.pop().expect("length n + 1"),
    }
}

pub fn count_identity_check(n: u64, b: &[u64]) -> bool {
    count_identity(n, b).holds()
}

/// The specialization `b = (a_1, ..., a_m, 1)`: the number of monomials of
/// degree at most `n` in a product of polynomial rings with `a_i` variables.
pub fn bounded_degree_identity(n: u64, a: &[u64]) -> CountIdentity {
    let mut b = a.to_vec();
    b.push(1);
    count_identity(n, &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let c = count_identity(2, &[1, 1]);
        assert_eq!(c.left, BigUint::from(3u32));
        assert!(c.holds());
        assert_eq!(count_identity(3, &[2, 1, 1]).right, BigUint::from(20u32));
        assert_eq!(count_identity(0, &[4, 2]).left, BigUint::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(big_binomial(10, 3), BigUint::from(120u32));
        assert_eq!(big_binomial(3, 5), BigUint::zero());
        assert_eq!(big_binomial(60, 30).to_string(), "118264581564861424");
    }
}
