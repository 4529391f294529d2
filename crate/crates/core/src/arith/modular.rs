//! Reduction of rational polynomials modulo a prime.
//!
//! Used as a second, independent route to coprimality: if `p` divides no
//! denominator of `a` or `b` and not the leading coefficient of `a`, then
//! the gcd over `Q` reduces to a divisor of the gcd over `F_p` of the same
//! degree, so a trivial gcd mod `p` proves a trivial gcd over `Q`.

use crate::arith::field::{PrimeField, Rationals};
use crate::arith::poly::Polynomial;

/// The Mersenne prime `2^61 - 1`.
pub const COPRIMALITY_PRIME: u64 = (1 << 61) - 1;

/// Image of `a` in `F_p[T]`; `None` if `p` divides a denominator.
pub fn reduce_mod_p(a: &Polynomial<Rationals>, field: PrimeField) -> Option<Polynomial<PrimeField>> {
    let coeffs = a.coeffs().iter().map(|c| field.from_rational(c)).collect::<Option<_>>()?;
    Some(Polynomial::new(field, coeffs))
}

/// `Some(true)` proves `gcd(a, b) = 1` over `Q`. `Some(false)` only says the
/// reductions share a factor mod `p`; `None` means the prime is unusable for
/// this pair.
pub fn coprime_mod_p(a: &Polynomial<Rationals>, b: &Polynomial<Rationals>, field: PrimeField) -> Option<bool> {
    let ra = reduce_mod_p(a, field)?;
    let rb = reduce_mod_p(b, field)?;
    if ra.degree() != a.degree() || ra.is_zero() {
        return None;
    }
    let g = ra.gcd(&rb).ok()?;
    Some(g.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::Field;

    #[test]
    fn coprimality_routes() {
        let fp = PrimeField::new(COPRIMALITY_PRIME).unwrap();
        let q = |c: &[i64]| Polynomial::from_i64s(Rationals, c);
        assert_eq!(coprime_mod_p(&q(&[-1, 1, 2, 1]), &q(&[0, 0, -1, 0, 1]), fp), Some(true));
        let r1 = &q(&[-2, 0, 1]) * &q(&[-1, 1]);
        assert_eq!(coprime_mod_p(&q(&[0, 0, -1, 0, 1]), &r1, fp), Some(false));
        // leading coefficient divisible by p: unusable
        let f7 = PrimeField::new(7).unwrap();
        assert_eq!(coprime_mod_p(&q(&[1, 7]), &q(&[1, 1]), f7), None);
        assert_eq!(Rationals.one(), crate::arith::Rational::from_integer(1.into()));
    }
}
