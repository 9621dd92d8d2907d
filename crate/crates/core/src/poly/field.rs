//! Coefficient fields.
//!
//! A [`Field`] is a small context object that owns whatever data the
//! arithmetic needs (the modulus of a prime field, nothing for the
//! rationals) and operates on plain element values.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::PolyError;

/// Which field a ring is defined over, in a form that can be printed and
/// compared without knowing the element type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldDescriptor {
    Rationals,
    Prime(u64),
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "QQ"),
            FieldDescriptor::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// `num / den`; fails when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<Self::Elem, PolyError>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Sign used when printing: `true` if the element should be printed
    /// as `- |a|`.
    fn is_negative(&self, a: &Self::Elem) -> bool;

    /// Writes `|a|` (or `a` itself for fields without a sign).
    fn fmt_abs(&self, a: &Self::Elem, f: &mut dyn fmt::Write) -> fmt::Result;

    /// Integer value when the element is an integer that fits in `i64`.
    fn to_i64(&self, a: &Self::Elem) -> Option<i64>;

    fn elem_to_string(&self, a: &Self::Elem) -> String {
        let mut s = String::new();
        if self.is_negative(a) {
            s.push('-');
        }
        self.fmt_abs(a, &mut s).expect("writing to a String cannot fail");
        s
    }
}

/// The field of rational numbers, with arbitrary-precision numerators and
/// denominators kept in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<BigRational, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(BigRational::new(num.clone(), den.clone()))
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        // Fast path for the ubiquitous +-1 coefficients of binomial ideals.
        if a.is_one() {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }

    fn is_negative(&self, a: &BigRational) -> bool {
        a.is_negative()
    }

    fn fmt_abs(&self, a: &BigRational, f: &mut dyn fmt::Write) -> fmt::Result {
        let a = a.abs();
        if a.denom().is_one() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }

    fn to_i64(&self, a: &BigRational) -> Option<i64> {
        if a.denom().is_one() {
            a.numer().to_i64()
        } else {
            None
        }
    }
}

/// The prime field `F_p` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Fails unless `p` is a prime below `2^32`.
    pub fn new(p: u64) -> Result<Self, PolyError> {
        if p < 2 || p >= (1 << 32) || !is_prime(p) {
            return Err(PolyError::InvalidModulus(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    fn reduce_big(&self, n: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        n.mod_floor(&p).to_u64().expect("residue fits in u64")
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(p: u64) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Result<u64, PolyError> {
        let d = self.reduce_big(den);
        if d == 0 {
            return Err(PolyError::DivisionByZero);
        }
        Ok(self.mul(&self.reduce_big(num), &self.inv(&d)))
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }

    fn is_negative(&self, a: &u64) -> bool {
        *a > self.p / 2
    }

    fn fmt_abs(&self, a: &u64, f: &mut dyn fmt::Write) -> fmt::Result {
        if self.is_negative(a) {
            write!(f, "{}", self.p - a)
        } else {
            write!(f, "{a}")
        }
    }

    fn to_i64(&self, a: &u64) -> Option<i64> {
        if self.is_negative(a) {
            Some(-((self.p - a) as i64))
        } else {
            Some(*a as i64)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u64, 2, 17, 32002] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert!(PrimeField::new(32004).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn rational_from_ratio_normalizes() {
        let q = Rationals;
        let x = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(q.elem_to_string(&x), "-2/3");
        assert!(q.from_ratio(&BigInt::from(1), &BigInt::from(0)).is_err());
    }

    #[test]
    fn prime_field_prints_symmetric() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.elem_to_string(&6), "-1");
        assert_eq!(f.elem_to_string(&3), "3");
        assert_eq!(f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap(), 4);
    }
}
