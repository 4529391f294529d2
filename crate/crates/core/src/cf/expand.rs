use alloc::vec::Vec;
use core::fmt;

use crate::arith::{format_list, Field, LaurentSeries, Polynomial, RationalFunction};
use crate::cf::convergents::ConvergentTable;
use crate::error::ArithError;

/// `[a_0, a_1, ..., a_m]` with `a_0` possibly zero and `deg a_i >= 1` for
/// `i >= 1`. Partial quotients are kept exactly as division produces them.
#[derive(Clone, Debug, PartialEq)]
pub struct ContinuedFraction<F: Field> {
    quotients: Vec<Polynomial<F>>,
}

impl<F: Field> ContinuedFraction<F> {
    /// Fails if some `a_i` with `i >= 1` is constant.
    pub fn new(quotients: Vec<Polynomial<F>>) -> Result<Self, ArithError> {
        if quotients.is_empty() {
            return Err(ArithError::InvalidArgument("a continued fraction needs a_0"));
        }
        if quotients[1..].iter().any(|a| a.degree().unwrap_or(0) == 0) {
            return Err(ArithError::InvalidArgument("partial quotients must have positive degree"));
        }
        Ok(Self { quotients })
    }

    /// `[a_0, a_1, ...]`.
    pub fn quotients(&self) -> &[Polynomial<F>] {
        &self.quotients
    }

    pub fn a0(&self) -> &Polynomial<F> {
        &self.quotients[0]
    }

    /// `a_i`, 0-based like the mathematical index.
    pub fn get(&self, i: usize) -> Option<&Polynomial<F>> {
        self.quotients.get(i)
    }

    /// Number of partial quotients after `a_0`.
    pub fn len(&self) -> usize {
        self.quotients.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `[d_1, ..., d_m]`.
    pub fn degrees(&self) -> Vec<usize> {
        self.quotients[1..].iter().map(|a| a.degree().expect("nonzero partial quotient")).collect()
    }

    /// Keep `a_0 .. a_m`.
    pub fn prefix(&self, m: usize) -> Self {
        Self { quotients: self.quotients[..=m.min(self.len())].to_vec() }
    }

    pub fn convergents(&self) -> ConvergentTable<F> {
        ConvergentTable::new(self)
    }

    /// Value of the finite continued fraction.
    pub fn evaluate(&self) -> RationalFunction<F> {
        let (x, y) = self.convergents().last().clone();
        RationalFunction::from_coprime(x, y).expect("convergent denominators are nonzero")
    }
}

impl<F: Field> fmt::Display for ContinuedFraction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_list(&self.quotients))
    }
}

/// Full Euclidean expansion of `num / den`.
pub fn cf_of_ratfunc<F: Field>(f: &RationalFunction<F>) -> ContinuedFraction<F> {
    cf_of_quotient(f.num(), f.den())
}

/// Euclidean expansion of `num / den` for any nonzero `den`; the pair need
/// not be reduced.
pub fn cf_of_quotient<F: Field>(num: &Polynomial<F>, den: &Polynomial<F>) -> ContinuedFraction<F> {
    let mut euclid = Euclid::new(num.clone(), den.clone());
    let mut quotients = Vec::new();
    while let Some(a) = euclid.next_quotient() {
        quotients.push(a);
    }
    ContinuedFraction { quotients }
}

/// Remainder sequence of `p / q`, one partial quotient at a time.
struct Euclid<F: Field> {
    p: Polynomial<F>,
    q: Polynomial<F>,
}

impl<F: Field> Euclid<F> {
    fn new(p: Polynomial<F>, q: Polynomial<F>) -> Self {
        assert!(!q.is_zero(), "zero denominator");
        Self { p, q }
    }

    /// Degree of the next partial quotient, if any.
    fn peek_degree(&self) -> Option<usize> {
        let dq = self.q.degree()?;
        Some(self.p.degree().map_or(0, |dp| dp.saturating_sub(dq)))
    }

    fn next_quotient(&mut self) -> Option<Polynomial<F>> {
        if self.q.is_zero() {
            return None;
        }
        let (a, r) = self.p.div_rem(&self.q).expect("same field, nonzero divisor");
        self.p = core::mem::replace(&mut self.q, r);
        Some(a)
    }
}

/// Certified prefix of the expansion of a truncated series.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesExpansion<F: Field> {
    pub cf: ContinuedFraction<F>,
    /// `2 deg y_m` for the last emitted `a_m`: the precision the prefix
    /// actually relies on.
    pub consumed: usize,
    /// The `N` with `known_down = -N` of the input.
    pub available: usize,
}

/// Partial quotients of `alpha` that are the same for every series agreeing
/// with `alpha` down to its `known_down = -N`.
///
/// The Euclidean expansion of the truncation `P / T^N` is cut before the
/// first `a_{n+1}` with `2 deg y_{n+1} > N`: below that bound
/// `|alpha - x_{n+1}/y_{n+1}| < |y_{n+1}|^-2`, so every convergent of the
/// truncation up to that degree is a convergent of `alpha` and conversely.
pub fn cf_of_series<F: Field>(alpha: &LaurentSeries<F>) -> Result<SeriesExpansion<F>, ArithError> {
    let (p, n) = alpha.truncation()?;
    let den = Polynomial::t_pow(alpha.field().clone(), n);
    let mut euclid = Euclid::new(p, den);
    let mut quotients = alloc::vec![euclid.next_quotient().expect("nonzero denominator")];
    let mut deg_y = 0usize;
    while let Some(d) = euclid.peek_degree() {
        if 2 * (deg_y + d) > n {
            break;
        }
        quotients.push(euclid.next_quotient().expect("peeked"));
        deg_y += d;
    }
    Ok(SeriesExpansion { cf: ContinuedFraction { quotients }, consumed: 2 * deg_y, available: n })
}

/// `t` with `|alpha - f| = |T|^-t`.
pub fn approx_order<F: Field>(alpha: &LaurentSeries<F>, f: &RationalFunction<F>) -> Result<i64, ArithError> {
    approx_order_quotient(alpha, f.num(), f.den())
}

/// As [`approx_order`] for `num / den` given as a possibly unreduced pair.
pub fn approx_order_quotient<F: Field>(
    alpha: &LaurentSeries<F>,
    num: &Polynomial<F>,
    den: &Polynomial<F>,
) -> Result<i64, ArithError> {
    let fs = LaurentSeries::from_quotient(num, den, alpha.known_down())?;
    let diff = alpha.sub(&fs);
    diff.top_exponent().map(|e| -e).ok_or(ArithError::OrderExceedsPrecision)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PrimeField, Rationals};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(c: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction<Rationals> {
        RationalFunction::new(q(n), q(d)).unwrap()
    }

    #[test]
    fn golden_quotients() {
        let cf = cf_of_ratfunc(&rf(&[-1, 1, 2, 1], &[0, 0, -1, 0, 1]));
        assert_eq!(
            cf.to_string(),
            "[0, 1*T^1 - 2*T^0, 1/2*T^1 + 1/4*T^0, 8/5*T^1 + 76/25*T^0, -125/48*T^1 + 25/24*T^0]"
        );
        assert_eq!(cf.degrees(), [1, 1, 1, 1]);
    }

    #[test]
    fn trivial_expansions() {
        let p = cf_of_ratfunc(&rf(&[1, 0, 3], &[1]));
        assert_eq!(p.quotients(), &[q(&[1, 0, 3])]);
        let g = cf_of_ratfunc(&rf(&[1], &[-1, 1]));
        assert_eq!(g.quotients(), &[q(&[]), q(&[-1, 1])]);
        assert!(ContinuedFraction::new(alloc::vec![q(&[0]), q(&[2])]).is_err());
    }

    #[test]
    fn series_of_polynomial_stops() {
        let s = LaurentSeries::from_polynomial(&q(&[1, 2, 3]), -6);
        let e = cf_of_series(&s).unwrap();
        assert_eq!(e.cf.quotients(), &[q(&[1, 2, 3])]);
        let s = LaurentSeries::from_polynomial(&q(&[1, 2, 3]), 1);
        assert_eq!(cf_of_series(&s), Err(ArithError::PrecisionExhausted));
    }

    #[test]
    fn stopping_rule_is_tight() {
        // 1/(T+c) known to T^-1 only does not determine c
        let s = LaurentSeries::from_descending(Rationals, -1, alloc::vec![Rationals.one()], -1);
        assert_eq!(cf_of_series(&s).unwrap().cf.len(), 0);
        let s = LaurentSeries::from_ratfunc(&rf(&[1], &[5, 1]), 2).unwrap();
        let e = cf_of_series(&s).unwrap();
        assert_eq!(e.cf.quotients(), &[q(&[]), q(&[5, 1])]);
        assert_eq!(e.consumed, 2);
    }

    #[test]
    fn orders() {
        let f = rf(&[1], &[-1, 1]);
        let alpha = LaurentSeries::from_ratfunc(&f, 20).unwrap();
        assert_eq!(approx_order(&alpha, &f), Err(ArithError::OrderExceedsPrecision));
        let (p, n) = alpha.truncate(-7).truncation().unwrap();
        let trunc = RationalFunction::over_t_power(p, n);
        assert_eq!(approx_order(&alpha, &trunc), Ok(8));
    }

    #[test]
    fn prime_field_expansion() {
        let f3 = PrimeField::new(3).unwrap();
        let num = Polynomial::from_i64s(f3, &[1, 1]);
        let den = Polynomial::from_i64s(f3, &[1, 0, 1, 1]);
        let cf = cf_of_quotient(&num, &den);
        assert_eq!(cf.evaluate(), RationalFunction::new(num, den).unwrap());
    }

    fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Polynomial<Rationals>> {
        proptest::collection::vec(-9i64..=9, 0..=max_deg + 1).prop_map(|c| q(&c))
    }

    fn ratfunc_strategy(max_deg: usize) -> impl Strategy<Value = RationalFunction<Rationals>> {
        (poly_strategy(max_deg), poly_strategy(max_deg))
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
    }

    // the 500-case run lives in the acceptance suite
    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn round_trip(f in ratfunc_strategy(30)) {
            let cf = cf_of_ratfunc(&f);
            prop_assert_eq!(cf.evaluate(), f.clone());
            prop_assert_eq!(cf.degrees().iter().sum::<usize>(), f.den().degree().unwrap());
            prop_assert!(cf.convergents().determinants_alternate());
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn approximation_identity(f in ratfunc_strategy(12)) {
            let cf = cf_of_ratfunc(&f);
            let table = cf.convergents();
            let dmax = f.den().degree().unwrap();
            let alpha = LaurentSeries::from_quotient(f.num(), f.den(), -(3 * dmax as i64) - 4).unwrap();
            for k in 0..cf.len() {
                let (x, y) = table.row(k);
                let conv = RationalFunction::from_coprime(x.clone(), y.clone()).unwrap();
                let t = approx_order(&alpha, &conv).unwrap();
                let expect = 2 * y.degree().unwrap() + cf.get(k + 1).unwrap().degree().unwrap();
                prop_assert_eq!(t, expect as i64);
            }
        }

        #[test]
        fn perturbation_below_precision(
            f in ratfunc_strategy(12),
            noise in proptest::collection::vec(-5i64..=5, 1..12),
            prec in 4usize..40,
        ) {
            let alpha = LaurentSeries::from_ratfunc(&f, prec).unwrap();
            let kd = alpha.known_down();
            if kd > 0 {
                return Ok(());
            }
            let coeffs = noise.iter().map(|&c| Rationals.from_i64(c)).collect();
            let tail = LaurentSeries::from_descending(Rationals, kd - 1, coeffs, kd - 12);
            let top = alpha.top_exponent().unwrap_or(kd - 1);
            let extended = LaurentSeries::from_descending(Rationals, top, alpha.coeffs().to_vec(), kd - 12);
            let perturbed = extended.add(&tail);
            let a = cf_of_series(&alpha).unwrap();
            let b = cf_of_series(&perturbed).unwrap();
            let m = a.cf.len();
            prop_assert!(b.cf.len() >= m);
            prop_assert_eq!(b.cf.prefix(m), a.cf);
        }
    }
}
