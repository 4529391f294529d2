//! Truncated Laurent series in `1/T`.
//!
//! A series stores its coefficients from the top exponent down to
//! `known_down`. Every coefficient at an exponent `>= known_down` is exact;
//! nothing is asserted below it. Operations propagate the bound:
//!
//! * `x + y`: `max(kd(x), kd(y))`
//! * `x * y`: `max(top(x) + kd(y), top(y) + kd(x))`
//! * `1 / x`: `kd(x) - 2 top(x)`
//!
//! where `top` of a series that is zero to its precision is taken as
//! `kd - 1`, the largest exponent its unknown tail can reach.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::field::Field;
use crate::arith::poly::Polynomial;
use crate::arith::ratfunc::RationalFunction;
use crate::error::ArithError;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<F: Field> {
    field: F,
    /// Exponent of `coeffs[0]`; unused when `coeffs` is empty.
    top: i64,
    /// Exponents `top, top - 1, ..., known_down`.
    coeffs: Vec<F::Elem>,
    known_down: i64,
}

impl<F: Field> LaurentSeries<F> {
    /// Build from coefficients of exponents `top, top - 1, ...`. Entries
    /// below `known_down` are dropped and missing ones down to it are zero.
    pub fn from_descending(field: F, top: i64, mut coeffs: Vec<F::Elem>, known_down: i64) -> Self {
        let span = top - known_down + 1;
        if span <= 0 {
            return Self::zero(field, known_down);
        }
        coeffs.resize(span as usize, field.zero());
        let mut s = Self { field, top, coeffs, known_down };
        s.normalize();
        s
    }

    /// The series known to be zero down to `known_down`.
    pub fn zero(field: F, known_down: i64) -> Self {
        Self { field, top: known_down - 1, coeffs: Vec::new(), known_down }
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !self.field.is_zero(c));
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.top -= k as i64;
            }
            None => {
                self.coeffs.clear();
                self.top = self.known_down - 1;
            }
        }
    }

    /// Terms of `p` with exponent `>= known_down`.
    pub fn from_polynomial(p: &Polynomial<F>, known_down: i64) -> Self {
        let field = p.field().clone();
        let Some(deg) = p.degree() else {
            return Self::zero(field, known_down);
        };
        let coeffs = p.coeffs().iter().rev().cloned().collect();
        Self::from_descending(field, deg as i64, coeffs, known_down)
    }

    /// Expansion of `f` exact for the `prec` exponents starting at its top.
    pub fn from_ratfunc(f: &RationalFunction<F>, prec: usize) -> Result<Self, ArithError> {
        if prec == 0 {
            return Err(ArithError::InvalidArgument("precision must be at least 1"));
        }
        let top = f.top_exponent().unwrap_or(0);
        Self::from_quotient(f.num(), f.den(), top - prec as i64 + 1)
    }

    /// Expansion of `num / den` (not necessarily reduced) down to exponent
    /// `known_down`. Costs one pass per output coefficient over the nonzero
    /// terms of `den`, so sparse denominators are cheap.
    pub fn from_quotient(num: &Polynomial<F>, den: &Polynomial<F>, known_down: i64) -> Result<Self, ArithError> {
        num.same_field(den)?;
        let field = num.field().clone();
        let dd = den.degree().ok_or(ArithError::ZeroDivisor)?;
        let Some(dn) = num.degree() else {
            return Ok(Self::zero(field, known_down));
        };
        let top = dn as i64 - dd as i64;
        if top < known_down {
            return Ok(Self::zero(field, known_down));
        }
        let count = (top - known_down + 1) as usize;
        let inv_lead = field.inv(&den.coeffs()[dd]).ok_or(ArithError::ZeroDivisor)?;
        // den terms below the leading one, as (distance from top, coefficient)
        let lower: Vec<(usize, &F::Elem)> = den.coeffs()[..dd]
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !field.is_zero(c))
            .map(|(j, c)| (dd - j, c))
            .collect();
        let mut out: Vec<F::Elem> = Vec::with_capacity(count);
        for m in 0..count {
            let mut acc = if m <= dn { num.coeffs()[dn - m].clone() } else { field.zero() };
            for &(dist, c) in &lower {
                if dist > m {
                    break;
                }
                field.sub_mul_assign(&mut acc, c, &out[m - dist]);
            }
            out.push(field.mul(&acc, &inv_lead));
        }
        Ok(Self::from_descending(field, top, out, known_down))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn known_down(&self) -> i64 {
        self.known_down
    }

    /// `k0` with `|x| = |T|^k0`; `None` when zero to the known precision.
    pub fn top_exponent(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.top)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Upper bound for the exponent of the true leading term.
    fn effective_top(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.known_down - 1
        } else {
            self.top
        }
    }

    /// Coefficient of `T^e`; `None` below the known precision.
    pub fn coeff(&self, e: i64) -> Option<F::Elem> {
        if e < self.known_down {
            return None;
        }
        if self.coeffs.is_empty() || e > self.top {
            return Some(self.field.zero());
        }
        Some(self.coeffs[(self.top - e) as usize].clone())
    }

    /// Stored coefficients, descending from the top exponent.
    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Forget everything below `known_down`.
    pub fn truncate(&self, known_down: i64) -> Self {
        if known_down <= self.known_down {
            return self.clone();
        }
        Self::from_descending(self.field.clone(), self.top, self.coeffs.clone(), known_down)
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(self.field == other.field, "field mismatch");
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self {
            field: f.clone(),
            top: self.top,
            coeffs: self.coeffs.iter().map(|c| f.neg(c)).collect(),
            known_down: self.known_down,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.field.mul(a, c)).collect();
        Self::from_descending(self.field.clone(), self.top, coeffs, self.known_down)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        let known = self.known_down.max(other.known_down);
        let top = self.effective_top().max(other.effective_top());
        if top < known {
            return Self::zero(f.clone(), known);
        }
        let mut out = vec![f.zero(); (top - known + 1) as usize];
        for (src, neg) in [(self, false), (other, negate)] {
            for (i, c) in src.coeffs.iter().enumerate() {
                let e = src.top - i as i64;
                if e < known {
                    break;
                }
                let slot = &mut out[(top - e) as usize];
                if neg {
                    f.sub_assign(slot, c);
                } else {
                    f.add_assign(slot, c);
                }
            }
        }
        Self::from_descending(f.clone(), top, out, known)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let f = &self.field;
        let known = (self.effective_top() + other.known_down).max(other.effective_top() + self.known_down);
        if self.is_zero() || other.is_zero() {
            return Self::zero(f.clone(), known);
        }
        let top = self.top + other.top;
        if top < known {
            return Self::zero(f.clone(), known);
        }
        let count = (top - known + 1) as usize;
        let mut out = vec![f.zero(); count];
        for (i, a) in self.coeffs.iter().enumerate().take(count) {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(count - i) {
                f.add_mul_assign(&mut out[i + j], a, b);
            }
        }
        Self::from_descending(f.clone(), top, out, known)
    }

    /// Multiplicative inverse; the result carries as many known terms as
    /// `self` does.
    pub fn invert(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroDivisor);
        }
        let f = &self.field;
        let count = self.coeffs.len();
        let inv_lead = f.inv(&self.coeffs[0]).ok_or(ArithError::ZeroDivisor)?;
        let mut out: Vec<F::Elem> = Vec::with_capacity(count);
        out.push(inv_lead.clone());
        for m in 1..count {
            let mut acc = f.zero();
            for i in 1..=m {
                f.add_mul_assign(&mut acc, &self.coeffs[i], &out[m - i]);
            }
            out.push(f.neg(&f.mul(&acc, &inv_lead)));
        }
        Ok(Self::from_descending(f.clone(), -self.top, out, self.known_down - 2 * self.top))
    }

    /// Terms of nonnegative exponent, the analogue of the integer part.
    pub fn polynomial_part(&self) -> Result<Polynomial<F>, ArithError> {
        if self.known_down > 0 {
            return Err(ArithError::PrecisionExhausted);
        }
        let f = &self.field;
        if self.is_zero() || self.top < 0 {
            return Ok(Polynomial::zero(f.clone()));
        }
        let coeffs = self.coeffs[..=self.top as usize].iter().rev().cloned().collect();
        Ok(Polynomial::new(f.clone(), coeffs))
    }

    /// The known part as `P / T^N` with `N = -known_down`.
    pub fn truncation(&self) -> Result<(Polynomial<F>, usize), ArithError> {
        if self.known_down > 0 {
            return Err(ArithError::PrecisionExhausted);
        }
        let n = (-self.known_down) as usize;
        let f = &self.field;
        if self.is_zero() {
            return Ok((Polynomial::zero(f.clone()), n));
        }
        let asc: Vec<F::Elem> = self.coeffs.iter().rev().cloned().collect();
        Ok((Polynomial::new(f.clone(), asc), n))
    }
}

impl<F: Field> fmt::Display for LaurentSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = &self.field;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if field.is_zero(c) {
                continue;
            }
            let e = self.top - i as i64;
            let neg = field.is_negative_repr(c);
            let shown = if neg && !first { field.neg(c) } else { c.clone() };
            if !first {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            field.write_elem(&shown, f)?;
            write!(f, "*T^{e}")?;
            first = false;
        }
        if !first {
            f.write_str(" + ")?;
        }
        write!(f, "O(T^{})", self.known_down - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{Rational, Rationals};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(c: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, c)
    }

    fn desc(top: i64, c: &[i64], kd: i64) -> LaurentSeries<Rationals> {
        LaurentSeries::from_descending(Rationals, top, c.iter().map(|&v| Rationals.from_i64(v)).collect(), kd)
    }

    #[test]
    fn geometric_series() {
        let f = RationalFunction::new(q(&[1]), q(&[-1, 1])).unwrap();
        let s = LaurentSeries::from_ratfunc(&f, 4).unwrap();
        assert_eq!(s, desc(-1, &[1, 1, 1, 1], -4));
        assert_eq!(s.to_string(), "1*T^-1 + 1*T^-2 + 1*T^-3 + 1*T^-4 + O(T^-5)");
    }

    #[test]
    fn r1_over_s1_matches_word_prefix() {
        // the first nine letters of W are 122121212
        let f = RationalFunction::new(q(&[-1, 1, 2, 1]), q(&[0, 0, -1, 0, 1])).unwrap();
        let s = LaurentSeries::from_ratfunc(&f, 9).unwrap();
        assert_eq!(s, desc(-1, &[1, 2, 2, 1, 2, 1, 2, 1, 2], -9));
    }

    #[test]
    fn polynomial_passthrough() {
        let f = RationalFunction::from_polynomial(q(&[0, 1]));
        let s = LaurentSeries::from_ratfunc(&f, 3).unwrap();
        assert_eq!(s.top_exponent(), Some(1));
        assert_eq!(s.known_down(), -1);
        assert_eq!(s.coeffs().iter().filter(|c| !Rationals.is_zero(c)).count(), 1);
        assert!(LaurentSeries::from_ratfunc(&f, 0).is_err());
    }

    #[test]
    fn invert_theta_prefix() {
        let x = desc(-1, &[1, 2, 2], -3);
        let inv = x.invert().unwrap();
        assert_eq!(inv, desc(1, &[1, -2, 2], -1));
        assert_eq!(inv.polynomial_part().unwrap(), q(&[-2, 1]));
        assert_eq!(LaurentSeries::zero(Rationals, -3).invert(), Err(ArithError::ZeroDivisor));
    }

    #[test]
    fn cancellations() {
        let x = desc(2, &[3, -1, 0, 5, 7], -2);
        let z = x.add(&x.neg());
        assert!(z.is_zero());
        assert_eq!(z.known_down(), -2);
        let one = x.mul(&x.invert().unwrap());
        assert_eq!(one, desc(0, &[1, 0, 0, 0, 0], -4));
    }

    #[test]
    fn polynomial_part_cases() {
        assert_eq!(desc(-1, &[1, 0, 1], -3).polynomial_part().unwrap(), q(&[]));
        assert_eq!(desc(0, &[3], 0).polynomial_part().unwrap(), q(&[3]));
        assert_eq!(desc(2, &[1], 1).polynomial_part(), Err(ArithError::PrecisionExhausted));
    }

    #[test]
    fn precision_propagation() {
        let x = desc(1, &[1, 1, 1, 1], -2);
        let y = desc(-1, &[2, 1], -2);
        assert_eq!(x.add(&y).known_down(), -2);
        assert_eq!(x.add(&y.truncate(0)).known_down(), 0);
        // max(1 + (-2), -1 + (-2))
        assert_eq!(x.mul(&y).known_down(), -1);
        assert_eq!(x.invert().unwrap().known_down(), -4);
    }

    fn arb_series() -> impl Strategy<Value = LaurentSeries<Rationals>> {
        (-6i64..6, proptest::collection::vec(-4i64..5, 1..10), 0i64..4).prop_map(|(top, c, extra)| {
            let kd = top - c.len() as i64 + 1 - extra;
            desc(top, &c, kd)
        })
    }

    proptest! {
        #[test]
        fn ultrametric(x in arb_series(), y in arb_series()) {
            let s = x.add(&y);
            if let (Some(tx), Some(ty), Some(ts)) = (x.top_exponent(), y.top_exponent(), s.top_exponent()) {
                prop_assert!(ts <= tx.max(ty));
                if tx != ty && tx.max(ty) >= s.known_down() {
                    prop_assert_eq!(ts, tx.max(ty));
                }
            }
        }

        #[test]
        fn ratfunc_expansion_times_den(num in proptest::collection::vec(-5i64..6, 1..8),
                                       den in proptest::collection::vec(-5i64..6, 1..8),
                                       prec in 1usize..20) {
            let (n, d) = (q(&num), q(&den));
            prop_assume!(!n.is_zero() && !d.is_zero());
            let f = RationalFunction::new(n, d).unwrap();
            let s = LaurentSeries::from_ratfunc(&f, prec).unwrap();
            let back = s.mul(&LaurentSeries::from_polynomial(f.den(), s.known_down()));
            let expected = LaurentSeries::from_polynomial(f.num(), back.known_down());
            prop_assert_eq!(back, expected);
        }

        #[test]
        fn perturbation_below_precision_is_invisible(x in arb_series(), noise in -3i64..4) {
            // changing a coefficient below known_down never shows up above it
            let mut c: Vec<Rational> = x.coeffs().to_vec();
            c.push(Rationals.from_i64(noise));
            let top = x.top_exponent().unwrap_or(x.known_down() - 1);
            let y = LaurentSeries::from_descending(Rationals, top, c, x.known_down() - 1).truncate(x.known_down());
            prop_assert_eq!(x, y);
        }
    }
}
