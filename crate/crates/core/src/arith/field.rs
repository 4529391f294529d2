//! Coefficient fields.
//!
//! A [`Field`] value is a descriptor: it knows how to combine its elements.
//! `Rationals` is a zero-sized descriptor for `Q`; [`PrimeField`] carries its
//! modulus, so two polynomials over `F_3` and `F_5` compare as living in
//! different fields and refuse to mix.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{ArithError, ParseError};

/// Arbitrary-precision reduced fraction; `Ratio` keeps the denominator
/// positive and the fraction in lowest terms.
pub type Rational = num_rational::BigRational;

pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }

    fn sub_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.sub(acc, b);
    }

    /// `acc -= a * b`, the inner step of every division loop.
    fn sub_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        self.sub_assign(acc, &prod);
    }

    /// `acc += a * b`.
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        self.add_assign(acc, &prod);
    }

    fn write_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem, ParseError>;

    /// Whether the canonical text form of `a` starts with a minus sign.
    fn is_negative_repr(&self, _a: &Self::Elem) -> bool {
        false
    }
}

/// The field `Q` of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn from_i64(&self, v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn inv(&self, a: &Rational) -> Option<Rational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn add_assign(&self, acc: &mut Rational, b: &Rational) {
        *acc += b;
    }

    fn sub_assign(&self, acc: &mut Rational, b: &Rational) {
        *acc -= b;
    }

    fn sub_mul_assign(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *acc -= a * b;
    }

    fn add_mul_assign(&self, acc: &mut Rational, a: &Rational, b: &Rational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *acc += a * b;
    }

    fn write_elem(&self, a: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(a, f)
    }

    fn parse_elem(&self, s: &str) -> Result<Rational, ParseError> {
        let s = s.trim();
        let bad = || ParseError::new(0, alloc::format!("invalid rational `{s}`"));
        match s.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(ParseError::new(0, "zero denominator"));
                }
                Ok(Rational::new(n, d))
            }
            None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
        }
    }

    fn is_negative_repr(&self, a: &Rational) -> bool {
        a.is_negative()
    }
}

/// A residue modulo the prime of its [`PrimeField`]; always in `[0, p)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeFieldElem(u64);

impl PrimeFieldElem {
    pub fn residue(self) -> u64 {
        self.0
    }
}

impl fmt::Display for PrimeFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field `F_p`; primality is checked on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if is_prime(p) {
            Ok(Self { p })
        } else {
            Err(ArithError::NotPrime(p))
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn elem(&self, v: u64) -> PrimeFieldElem {
        PrimeFieldElem(v % self.p)
    }

    /// Image of an integer.
    pub fn from_bigint(&self, v: &BigInt) -> PrimeFieldElem {
        let r = v.mod_floor(&BigInt::from(self.p));
        PrimeFieldElem(r.to_u64().expect("residue below modulus"))
    }

    /// Image of a rational number; `None` when `p` divides the denominator.
    pub fn from_rational(&self, v: &Rational) -> Option<PrimeFieldElem> {
        let den = self.from_bigint(v.denom());
        let inv = self.inv(&den)?;
        Some(self.mul(&self.from_bigint(v.numer()), &inv))
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
}

impl Field for PrimeField {
    type Elem = PrimeFieldElem;

    fn zero(&self) -> PrimeFieldElem {
        PrimeFieldElem(0)
    }

    fn one(&self) -> PrimeFieldElem {
        PrimeFieldElem(1 % self.p)
    }

    fn from_i64(&self, v: i64) -> PrimeFieldElem {
        PrimeFieldElem((v as i128).rem_euclid(self.p as i128) as u64)
    }

    fn is_zero(&self, a: &PrimeFieldElem) -> bool {
        a.0 == 0
    }

    fn add(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        let s = a.0 as u128 + b.0 as u128;
        PrimeFieldElem((s % self.p as u128) as u64)
    }

    fn sub(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        if a.0 >= b.0 {
            PrimeFieldElem(a.0 - b.0)
        } else {
            PrimeFieldElem(self.p - (b.0 - a.0))
        }
    }

    fn mul(&self, a: &PrimeFieldElem, b: &PrimeFieldElem) -> PrimeFieldElem {
        PrimeFieldElem(self.mul_mod(a.0, b.0))
    }

    fn neg(&self, a: &PrimeFieldElem) -> PrimeFieldElem {
        if a.0 == 0 {
            *a
        } else {
            PrimeFieldElem(self.p - a.0)
        }
    }

    fn inv(&self, a: &PrimeFieldElem) -> Option<PrimeFieldElem> {
        if a.0 == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i128, a.0 as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        Some(PrimeFieldElem(s0.rem_euclid(self.p as i128) as u64))
    }

    fn write_elem(&self, a: &PrimeFieldElem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", a.0)
    }

    fn parse_elem(&self, s: &str) -> Result<PrimeFieldElem, ParseError> {
        let s = s.trim();
        let v = BigInt::from_str(s).map_err(|_| ParseError::new(0, alloc::format!("invalid residue `{s}`")))?;
        Ok(self.from_bigint(&v))
    }
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u128 % m as u128;
    let mut b = base as u128 % m as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u128;
        }
        b = b * b % m as u128;
        exp >>= 1;
    }
    acc as u64
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert_eq!(PrimeField::new(9), Err(ArithError::NotPrime(9)));
    }

    #[test]
    fn prime_field_ops() {
        let f = PrimeField::new(7).unwrap();
        let a = f.elem(3);
        assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
        assert_eq!(f.from_i64(-1), f.elem(6));
        assert_eq!(f.sub(&f.elem(2), &f.elem(5)), f.elem(4));
        assert_eq!(f.inv(&f.zero()), None);
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f.from_rational(&half), Some(f.elem(4)));
        assert_eq!(PrimeField::new(2).unwrap().from_rational(&half), None);
    }

    #[test]
    fn rational_parse() {
        let q = Rationals;
        assert_eq!(q.parse_elem("-125/48").unwrap(), Rational::new((-125).into(), 48.into()));
        assert_eq!(q.parse_elem("6/4").unwrap(), Rational::new(3.into(), 2.into()));
        assert!(q.parse_elem("1/0").is_err());
        assert!(q.parse_elem("x").is_err());
    }
}
