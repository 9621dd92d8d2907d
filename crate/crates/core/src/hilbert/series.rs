use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// `numerator(z) / (1 - z)^denominator_exponent` with integer numerator.
///
/// Values built by [`HilbertSeries::new`] are kept reduced: all factors
/// `(1 - z)` shared by numerator and denominator are cancelled, so the
/// numerator is the h-polynomial and the exponent is the Krull dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    denominator_exponent: usize,
}

impl HilbertSeries {
    pub fn new(numerator: Vec<i64>, denominator_exponent: usize) -> Self {
        let mut num = trim(numerator);
        let mut exp = denominator_exponent;
        while exp > 0 && !num.is_empty() && num.iter().sum::<i64>() == 0 {
            num = divide_by_one_minus_z(&num);
            exp -= 1;
        }
        HilbertSeries {
            numerator: num,
            denominator_exponent: exp,
        }
    }

    /// A polynomial (finite-length) series.
    pub fn polynomial(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs, 0)
    }

    /// `1 / (1 - z)^n`, the series of a polynomial ring in `n` variables.
    pub fn of_polynomial_ring(n: usize) -> Self {
        Self::new(vec![1], n)
    }

    /// Coefficients of the h-polynomial, lowest degree first.
    pub fn h_polynomial(&self) -> &[i64] {
        &self.numerator
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator_exponent(&self) -> usize {
        self.denominator_exponent
    }

    /// Krull dimension of the graded ring.
    pub fn dimension(&self) -> usize {
        self.denominator_exponent
    }

    /// Multiplicity: the h-polynomial at 1.
    pub fn multiplicity(&self) -> i64 {
        self.numerator.iter().sum()
    }

    /// The numerator over `(1 - z)^n` for a given `n >= dimension`.
    pub fn numerator_over(&self, n: usize) -> Vec<i64> {
        assert!(n >= self.denominator_exponent, "exponent below the dimension");
        let mut num = self.numerator.clone();
        for _ in self.denominator_exponent..n {
            num = poly_mul(&num, &[1, -1]);
        }
        trim(num)
    }

    /// Value of the Hilbert function at `i`.
    pub fn coefficient(&self, i: usize) -> i64 {
        let d = self.denominator_exponent;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| *k <= i)
            .map(|(k, &h)| {
                if d == 0 {
                    if k == i {
                        h
                    } else {
                        0
                    }
                } else {
                    h * binomial(i - k + d - 1, d - 1)
                }
            })
            .sum()
    }

    /// Hilbert function values at `0..=n`.
    pub fn coefficients(&self, n: usize) -> Vec<i64> {
        (0..=n).map(|i| self.coefficient(i)).collect()
    }

    /// Power series expansion to order `n`.
    pub fn expand(&self, n: usize) -> SeriesTruncation {
        SeriesTruncation::from_integers(&self.coefficients(n))
    }

    /// Expansion of `H(-z)` to order `n`.
    pub fn expand_at_minus_z(&self, n: usize) -> SeriesTruncation {
        let c: Vec<i64> = self
            .coefficients(n)
            .into_iter()
            .enumerate()
            .map(|(i, v)| if i % 2 == 0 { v } else { -v })
            .collect();
        SeriesTruncation::from_integers(&c)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = format_z_polynomial(&self.numerator);
        let nterms = self.numerator.iter().filter(|&&c| c != 0).count();
        match self.denominator_exponent {
            0 => write!(f, "{num}"),
            d => {
                if nterms > 1 {
                    write!(f, "({num})")?;
                } else {
                    write!(f, "{num}")?;
                }
                if d == 1 {
                    write!(f, "/(1-z)")
                } else {
                    write!(f, "/(1-z)^{d}")
                }
            }
        }
    }
}

/// Writes `c_0 + c_1 z + ...` as `1+2z-2z^2`.
pub fn format_z_polynomial(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        let a = c.unsigned_abs();
        if a != 1 || k == 0 {
            s.push_str(&a.to_string());
        }
        match k {
            0 => {}
            1 => s.push('z'),
            _ => s.push_str(&format!("z^{k}")),
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Parses `1,2,-2` style coefficient lists.
pub fn parse_coefficients(text: &str) -> Option<Vec<i64>> {
    text.split(',').map(|t| t.trim().parse().ok()).collect()
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient by `1 - z` (the caller checks divisibility).
fn divide_by_one_minus_z(num: &[i64]) -> Vec<i64> {
    // q_k = sum_{i<=k} n_i
    let mut out = Vec::with_capacity(num.len());
    let mut acc = 0;
    for &c in &num[..num.len() - 1] {
        acc += c;
        out.push(acc);
    }
    trim(out)
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial coefficient overflows i64")
}

/// A power series known through `z^N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesTruncation {
    #[serde(serialize_with = "serialize_rationals")]
    coefficients: Vec<BigRational>,
}

fn serialize_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&c.to_string())?;
    }
    seq.end()
}

impl SeriesTruncation {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        assert!(!coefficients.is_empty(), "a truncation needs at least z^0");
        SeriesTruncation { coefficients }
    }

    pub fn from_integers(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    /// A polynomial, padded or cut to order `n`.
    pub fn from_polynomial(c: &[i64], n: usize) -> Self {
        let mut v: Vec<i64> = c.iter().copied().take(n + 1).collect();
        v.resize(n + 1, 0);
        Self::from_integers(&v)
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> &BigRational {
        &self.coefficients[k]
    }

    /// Integer coefficients, if they all are integers fitting `i64`.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.coefficients
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate().take(n + 1 - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplicative inverse by the recurrence
    /// `c_0 = 1/h_0`, `c_k = -(sum_{j>=1} h_j c_{k-j}) / h_0`.
    pub fn inverse(&self) -> Self {
        let h = &self.coefficients;
        assert!(!h[0].is_zero(), "series with zero constant term has no inverse");
        let h0_inv = h[0].recip();
        let n = self.order();
        let mut c: Vec<BigRational> = Vec::with_capacity(n + 1);
        c.push(h0_inv.clone());
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=k {
                if !h[j].is_zero() {
                    s += &h[j] * &c[k - j];
                }
            }
            c.push(-s * &h0_inv);
        }
        Self::new(c)
    }

    /// `(1 + sign z^h)^e` through order `n`, for any integer `e`.
    pub fn binomial_power(h: usize, sign: i64, e: i64, n: usize) -> Self {
        let mut out = vec![BigRational::zero(); n + 1];
        // Generalized binomial coefficients C(e, j) sign^j.
        let mut coeff = BigRational::one();
        let mut j = 0usize;
        while j * h <= n {
            out[j * h] = coeff.clone();
            // C(e, j+1) = C(e, j) (e - j) / (j + 1)
            coeff = coeff * BigRational::from_integer(BigInt::from(e - j as i64))
                / BigRational::from_integer(BigInt::from(j as i64 + 1))
                * BigRational::from_integer(BigInt::from(sign));
            j += 1;
            if coeff.is_zero() {
                break;
            }
        }
        Self::new(out)
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| c.is_negative())
    }
}

impl fmt::Display for SeriesTruncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// The exponents `e'_1, ..., e'_N` of the unique factorization
/// `prod_{h odd} (1+z^h)^{e'_h} / prod_{h even} (1-z^h)^{e'_h}` of a series
/// with constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeviationSequence {
    values: Vec<i64>,
}

impl DeviationSequence {
    /// Extracts the exponents one at a time: after dividing out the factors
    /// for `1..h`, the coefficient of `z^h` is `e'_h`.
    pub fn from_series(p: &SeriesTruncation) -> Self {
        assert!(p.coefficient(0).is_one(), "series must start with 1");
        let n = p.order();
        let mut cur = p.clone();
        let mut values = Vec::with_capacity(n);
        for h in 1..=n {
            let c = cur.coefficient(h);
            assert!(c.is_integer(), "deviation extraction needs integer coefficients");
            let e = c.to_integer().to_i64().expect("deviation fits i64");
            values.push(e);
            if e != 0 {
                // Divide by the factor for h.
                let factor_inv = if h % 2 == 1 {
                    SeriesTruncation::binomial_power(h, 1, -e, n)
                } else {
                    SeriesTruncation::binomial_power(h, -1, e, n)
                };
                cur = cur.mul(&factor_inv);
            }
        }
        DeviationSequence { values }
    }

    /// `e'_1, ..., e'_N` (index 0 holds `e'_1`).
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `e'_h` for `h >= 1`.
    pub fn get(&self, h: usize) -> i64 {
        self.values[h - 1]
    }

    /// Rebuilds the product through order `n`.
    pub fn reconstruct(&self, n: usize) -> SeriesTruncation {
        let mut acc = SeriesTruncation::from_polynomial(&[1], n);
        for (k, &e) in self.values.iter().enumerate() {
            let h = k + 1;
            if e == 0 || h > n {
                continue;
            }
            let factor = if h % 2 == 1 {
                SeriesTruncation::binomial_power(h, 1, e, n)
            } else {
                SeriesTruncation::binomial_power(h, -1, -e, n)
            };
            acc = acc.mul(&factor);
        }
        acc
    }

    pub fn first_nonpositive(&self) -> Option<usize> {
        self.values.iter().position(|&e| e <= 0).map(|k| k + 1)
    }

    pub fn first_negative(&self) -> Option<usize> {
        self.values.iter().position(|&e| e < 0).map(|k| k + 1)
    }
}

/// Numerical Koszulness obstructions read off a Hilbert series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesObstructions {
    /// Coefficients of `1 / H(-z)` through `z^N`.
    pub inverse: SeriesTruncation,
    pub deviations: DeviationSequence,
    /// Least `k` with a negative coefficient of `z^k` in `1 / H(-z)`.
    pub first_negative_inverse: Option<usize>,
    /// Least `h` with `e'_h <= 0`.
    pub first_nonpositive_deviation: Option<usize>,
}

pub fn series_obstructions(h: &HilbertSeries, n: usize) -> SeriesObstructions {
    let inverse = h.expand_at_minus_z(n).inverse();
    let deviations = DeviationSequence::from_series(&inverse);
    SeriesObstructions {
        first_negative_inverse: inverse.first_negative(),
        first_nonpositive_deviation: deviations.first_nonpositive(),
        inverse,
        deviations,
    }
}

/// Outcome of comparing `sum beta_i z^i * H(-z)` with 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobergCheck {
    /// Largest `k` such that all coefficients through `z^k` agree.
    pub holds_up_to: usize,
    pub first_mismatch: Option<usize>,
}

/// Compares `sum_i betti_diag[i] z^i * H(-z)` with `1` through `z^n`
/// (or through the length of `betti_diag`, whichever is smaller).
pub fn froberg_identity_check(h: &HilbertSeries, betti_diag: &[u64], n: usize) -> FrobergCheck {
    let n = n.min(betti_diag.len().saturating_sub(1));
    let p: Vec<i64> = betti_diag[..=n].iter().map(|&b| b as i64).collect();
    let prod = SeriesTruncation::from_integers(&p).mul(&h.expand_at_minus_z(n));
    let mismatch = (0..=n).find(|&k| {
        let expected = if k == 0 { BigRational::one() } else { BigRational::zero() };
        prod.coefficient(k) != &expected
    });
    FrobergCheck {
        holds_up_to: mismatch.map_or(n, |k| k.saturating_sub(1)),
        first_mismatch: mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_display() {
        let h = HilbertSeries::new(vec![1, 2, -2, -2, 2], 2);
        assert_eq!(h.to_string(), "(1+2z-2z^2-2z^3+2z^4)/(1-z)^2");
        let h = HilbertSeries::new(vec![1, 3, 0, -3], 1);
        assert_eq!(h.to_string(), "(1+3z-3z^3)/(1-z)");
        // (1 - z^2)/(1-z)^3 = (1+z)/(1-z)^2
        let h = HilbertSeries::new(vec![1, 0, -1], 3);
        assert_eq!(h.h_polynomial(), &[1, 1]);
        assert_eq!(h.dimension(), 2);
        assert_eq!(HilbertSeries::of_polynomial_ring(3).to_string(), "1/(1-z)^3");
        assert_eq!(HilbertSeries::polynomial(vec![1, 4, 5]).to_string(), "1+4z+5z^2");
    }

    #[test]
    fn hilbert_function_values() {
        let h = HilbertSeries::of_polynomial_ring(3);
        assert_eq!(h.coefficients(3), vec![1, 3, 6, 10]);
        let h = HilbertSeries::new(vec![1, 1], 1);
        assert_eq!(h.coefficients(3), vec![1, 2, 2, 2]);
    }

    #[test]
    fn inverse_of_one_plus_z() {
        let s = SeriesTruncation::from_integers(&[1, 1, 0, 0, 0]).inverse();
        assert_eq!(s.to_integers().unwrap(), vec![1, -1, 1, -1, 1]);
    }

    #[test]
    fn polynomial_ring_deviations() {
        let o = series_obstructions(&HilbertSeries::of_polynomial_ring(3), 8);
        assert_eq!(o.inverse.to_integers().unwrap(), vec![1, 3, 3, 1, 0, 0, 0, 0, 0]);
        assert_eq!(o.deviations.get(1), 3);
        assert!((2..=8).all(|h| o.deviations.get(h) == 0));
        assert_eq!(o.first_negative_inverse, None);
    }

    #[test]
    fn binomial_power_negative_exponent() {
        // (1+z)^-1
        let s = SeriesTruncation::binomial_power(1, 1, -1, 4);
        assert_eq!(s.to_integers().unwrap(), vec![1, -1, 1, -1, 1]);
        // (1-z^2)^2
        let s = SeriesTruncation::binomial_power(2, -1, 2, 4);
        assert_eq!(s.to_integers().unwrap(), vec![1, 0, -2, 0, 1]);
    }
}
