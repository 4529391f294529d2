use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::arith::field::Field;
use crate::error::ArithError;

/// Dense univariate polynomial in `T`.
///
/// `coeffs[i]` is the coefficient of `T^i`; the zero polynomial is the empty
/// vector and the leading coefficient of any other polynomial is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: Field> Polynomial<F> {
    pub fn new(field: F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Self { field, coeffs };
        p.trim();
        p
    }

    pub fn zero(field: F) -> Self {
        Self { field, coeffs: Vec::new() }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c * T^k`.
    pub fn monomial(field: F, c: F::Elem, k: usize) -> Self {
        if field.is_zero(&c) {
            return Self::zero(field);
        }
        let mut coeffs = vec![field.zero(); k + 1];
        coeffs[k] = c;
        Self { field, coeffs }
    }

    /// The indeterminate `T`.
    pub fn t(field: F) -> Self {
        let one = field.one();
        Self::monomial(field, one, 1)
    }

    /// `T^k`.
    pub fn t_pow(field: F, k: usize) -> Self {
        let one = field.one();
        Self::monomial(field, one, k)
    }

    /// Integer coefficients, ascending.
    pub fn from_i64s(field: F, coeffs: &[i64]) -> Self {
        let c = coeffs.iter().map(|&v| field.from_i64(v)).collect();
        Self::new(field, c)
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F::Elem> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !self.field.is_zero(c)).count()
    }

    /// `Some((c, k))` when the polynomial is the single term `c T^k`.
    pub fn as_monomial(&self) -> Option<(F::Elem, usize)> {
        let k = self.degree()?;
        if self.coeffs[..k].iter().all(|c| self.field.is_zero(c)) {
            Some((self.coeffs[k].clone(), k))
        } else {
            None
        }
    }

    /// Largest `v` with `T^v` dividing `self`; `None` for zero.
    pub fn t_adic_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.field.is_zero(c))
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn same_field(&self, other: &Self) -> Result<(), ArithError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ArithError::FieldMismatch)
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(self.field == other.field, "field mismatch");
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(self.field.clone());
        }
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Multiply by `T^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { field: self.field.clone(), coeffs }
    }

    /// Divide by `T^k`, discarding the terms of degree below `k`.
    pub fn unshift(&self, k: usize) -> Self {
        let coeffs = self.coeffs.iter().skip(k).cloned().collect();
        Self::new(self.field.clone(), coeffs)
    }

    /// Scale so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Indices and values of the nonzero coefficients.
    fn support(&self) -> Vec<(usize, &F::Elem)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !self.field.is_zero(c)).collect()
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(len, f.zero());
        for (c, o) in coeffs.iter_mut().zip(other.coeffs.iter()) {
            if negate {
                f.sub_assign(c, o);
            } else {
                f.add_assign(c, o);
            }
        }
        Self::new(f.clone(), coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone());
        }
        let (sparse, dense) = if self.term_count() <= other.term_count() { (self, other) } else { (other, self) };
        let dense_support = dense.support();
        let mut coeffs = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in sparse.support() {
            for &(j, b) in &dense_support {
                f.add_mul_assign(&mut coeffs[i + j], a, b);
            }
        }
        Self::new(f.clone(), coeffs)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        self.same_field(divisor)?;
        let f = &self.field;
        let db = divisor.degree().ok_or(ArithError::ZeroDivisor)?;
        let da = match self.degree() {
            Some(d) if d >= db => d,
            _ => return Ok((Self::zero(f.clone()), self.clone())),
        };
        let inv_lc = f.inv(&divisor.coeffs[db]).ok_or(ArithError::ZeroDivisor)?;
        let lower: Vec<(usize, &F::Elem)> = divisor.support().into_iter().filter(|&(j, _)| j < db).collect();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if f.is_zero(top) {
                continue;
            }
            let q = f.mul(top, &inv_lc);
            for &(j, b) in &lower {
                f.sub_mul_assign(&mut rem[i + j], &q, b);
            }
            rem[i + db] = f.zero();
            quot[i] = q;
        }
        rem.truncate(db);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(ArithError::GcdUndefined);
        }
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            // keeping remainders monic limits coefficient growth over Q
            b = r.monic();
        }
        Ok(a.monic())
    }

    /// Exact quotient; fails unless `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, ArithError> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ArithError::InvalidArgument("inexact polynomial division"))
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Apply a coefficient map into another field.
    pub fn map_field<G: Field>(&self, target: G, mut map: impl FnMut(&F::Elem) -> G::Elem) -> Polynomial<G> {
        let coeffs = self.coeffs.iter().map(&mut map).collect();
        Polynomial::new(target, coeffs)
    }
}

impl<F: Field> Add<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.add_impl(rhs, false)
    }
}

impl<F: Field> Sub<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.add_impl(rhs, true)
    }
}

impl<F: Field> Mul<&Polynomial<F>> for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        self.mul_impl(rhs)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let f = &self.field;
        Polynomial { field: f.clone(), coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$m(&rhs)
            }
        }
        impl<F: Field> $tr<&Polynomial<F>> for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: &Polynomial<F>) -> Polynomial<F> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{PrimeField, Rationals};

    fn q(c: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, c)
    }

    #[test]
    fn div_rem_examples() {
        // (T^2 - 1) / (T - 1)
        let (quo, rem) = q(&[-1, 0, 1]).div_rem(&q(&[-1, 1])).unwrap();
        assert_eq!((quo, rem), (q(&[1, 1]), q(&[])));
        // T^3 / T
        let (quo, rem) = q(&[0, 0, 0, 1]).div_rem(&q(&[0, 1])).unwrap();
        assert_eq!((quo, rem), (q(&[0, 0, 1]), q(&[])));
        // long division by hand: T^3+2T^2+T-1 = (T-2)(T^2+4T+9) + 17
        let (quo, rem) = q(&[-1, 1, 2, 1]).div_rem(&q(&[-2, 1])).unwrap();
        assert_eq!((quo, rem), (q(&[9, 4, 1]), q(&[17])));
    }

    #[test]
    fn div_by_zero() {
        assert_eq!(q(&[1, 1]).div_rem(&q(&[])), Err(ArithError::ZeroDivisor));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])).unwrap(), q(&[-1, 1]));
        // R_1 and S_1 are coprime
        assert_eq!(q(&[-1, 1, 2, 1]).gcd(&q(&[0, 0, -1, 0, 1])).unwrap(), q(&[1]));
        // T^2 (T^2 - 1) and (T^2 - 2)(T - 1) share T - 1
        let s1 = q(&[0, 0, -1, 0, 1]);
        let r1 = &q(&[-2, 0, 1]) * &q(&[-1, 1]);
        assert_eq!(s1.gcd(&r1).unwrap(), q(&[-1, 1]));
        assert_eq!(q(&[]).gcd(&q(&[])), Err(ArithError::GcdUndefined));
        assert_eq!(q(&[]).gcd(&q(&[0, 2])).unwrap(), q(&[0, 1]));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let f3 = PrimeField::new(3).unwrap();
        let f5 = PrimeField::new(5).unwrap();
        let a = Polynomial::from_i64s(f3, &[1, 1]);
        let b = Polynomial::from_i64s(f5, &[1, 1]);
        assert_eq!(a.div_rem(&b), Err(ArithError::FieldMismatch));
        assert_eq!(a.gcd(&b), Err(ArithError::FieldMismatch));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixed_field_operator_panics() {
        let a = Polynomial::from_i64s(PrimeField::new(3).unwrap(), &[1]);
        let b = Polynomial::from_i64s(PrimeField::new(5).unwrap(), &[1]);
        let _ = &a + &b;
    }

    #[test]
    fn over_f3() {
        let f = PrimeField::new(3).unwrap();
        // T^2 + 1 is irreducible over F_3, T^2 - 1 = (T - 1)(T + 1)
        let a = Polynomial::from_i64s(f, &[1, 0, 1]);
        let b = Polynomial::from_i64s(f, &[-1, 0, 1]);
        assert!(a.gcd(&b).unwrap().is_one());
        assert_eq!(b.gcd(&Polynomial::from_i64s(f, &[1, 1])).unwrap(), Polynomial::from_i64s(f, &[1, 1]));
    }

    #[test]
    fn small_helpers() {
        let p = q(&[0, 0, 3]);
        assert_eq!(p.as_monomial(), Some((Rationals.from_i64(3), 2)));
        assert_eq!(p.t_adic_valuation(), Some(2));
        assert_eq!(q(&[1, 1]).pow(3), q(&[1, 3, 3, 1]));
        assert_eq!(q(&[1, 2, 3]).eval(&Rationals.from_i64(2)), Rationals.from_i64(17));
        assert_eq!(q(&[1, 2]).shift(2).unshift(2), q(&[1, 2]));
        let half = crate::arith::Rational::new(1.into(), 2.into());
        assert_eq!(q(&[2, 4]).monic(), Polynomial::new(Rationals, vec![half, Rationals.one()]));
    }
}
