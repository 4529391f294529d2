use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::{coprime_mod_p, Field, Polynomial, PrimeField, Rational, Rationals, COPRIMALITY_PRIME};
use crate::cf::approx_order_quotient;
use crate::error::{ArithError, VerifyError};
use crate::verify::pairs::{ApproximantPair, Context};
use crate::verify::report::{collect, poly_digest, CheckReport};
use crate::words::{first_diff_rank, j_word, u_prime_word, u_word, v_word, LengthTable};

/// Above this degree the modular gcd cross-check is skipped.
pub const MODULAR_GCD_LIMIT: usize = 10_000;
/// Above this degree the exact gcd over `Q` is skipped.
pub const EXACT_GCD_LIMIT: usize = 120;

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

fn ells(ctx: &Context, n: usize) -> (i64, i64) {
    (ctx.lab().ell(n) as i64, ctx.lab().ell(n - 1) as i64)
}

fn need(ctx: &Context, top: usize) -> Result<(), VerifyError> {
    if ctx.lab().top() < top {
        let required = LengthTable::new(top).ell(top);
        return Err(VerifyError::InsufficientPrecision { required });
    }
    Ok(())
}

fn measured_order(ctx: &Context, pair: &ApproximantPair<Rationals>, prec: usize) -> Result<i64, VerifyError> {
    let theta = ctx.theta(prec)?;
    approx_order_quotient(&theta, &pair.r, &pair.s).map_err(|e| match e {
        ArithError::OrderExceedsPrecision => VerifyError::InsufficientPrecision { required: prec + 1 },
        e => e.into(),
    })
}

fn nonzero_at(p: &Polynomial<Rationals>, x: i64) -> &'static str {
    if Rationals.is_zero(&p.eval(&Rationals.from_i64(x))) {
        "0"
    } else {
        "nonzero"
    }
}

/// Exponent `t_n` of `|theta - R_n/S_n| = |T|^-t_n`, measured on the series
/// and on the words, against `(9 l_n + 3 l_{n-1} + 11)/2`, and the ratio
/// `t_n / deg S_n` against `3 - 4/(3 l_n + l_{n-1} + 5)`.
pub fn check_lemma1(ctx: &Context, n: usize) -> Result<Vec<CheckReport>, VerifyError> {
    need(ctx, n + 2)?;
    let (l, lp) = ells(ctx, n);
    let expected_t = (9 * l + 3 * lp + 11) / 2;
    let pair = ctx.lemma1_pair(n)?;
    let prec = ctx.lab().ell(n + 2);
    let t = measured_order(ctx, &pair, prec)?;

    let (u, v) = (u_word(ctx.lab(), n)?, v_word(ctx.lab(), n)?);
    let stream = u.iter().copied().chain(v.iter().copied().cycle());
    let t_word = first_diff_rank(ctx.lab().prefix(prec)?.iter().copied(), stream, prec)?;

    let deg_s = pair.s.degree().expect("nonzero") as i64;
    Ok(collect([
        CheckReport::new("lemma1.t", n, expected_t, t),
        CheckReport::new("lemma1.t_word", n, expected_t, t_word),
        CheckReport::new("lemma1.omega", n, ratio(3, 1) - ratio(4, 3 * l + lp + 5), ratio(t, deg_s)),
        CheckReport::new("lemma1.r_at_1", n, "nonzero", nonzero_at(&pair.r, 1)),
    ]))
}

/// Exponent `t'_n` for `R'_n/S'_n` against `2|U'_n| + |J_n| + 1`, and
/// `t'_n / deg S'_n` against `2 + (l_n + l_{n-1} + 1)/(6 l_n + 2 l_{n-1} + 8)`.
pub fn check_lemma2(ctx: &Context, n: usize) -> Result<Vec<CheckReport>, VerifyError> {
    need(ctx, n + 3)?;
    let (l, lp) = ells(ctx, n);
    let u_prime = u_prime_word(ctx.lab(), n)?;
    let j = j_word(ctx.lab(), n)?;
    let expected_t = 2 * (3 * l + lp + 4) + (l + lp - 1) / 2 + 1;
    let from_words = (2 * u_prime.len() + j.len() + 1) as i64;
    let pair = ctx.lemma2_pair(n)?;
    let prec = ctx.lab().ell(n + 3);
    let t = measured_order(ctx, &pair, prec)?;

    let stream = u_prime.iter().copied().cycle();
    let t_word = first_diff_rank(ctx.lab().prefix(prec)?.iter().copied(), stream, prec)?;

    let deg_s = pair.s.degree().expect("nonzero") as i64;
    Ok(collect([
        CheckReport::new("lemma2.t", n, expected_t, t),
        CheckReport::new("lemma2.t_word", n, expected_t, t_word),
        CheckReport::new("lemma2.t_lengths", n, expected_t, from_words),
        CheckReport::new("lemma2.omega", n, ratio(2, 1) + ratio(l + lp + 1, 6 * l + 2 * lp + 8), ratio(t, deg_s)),
        CheckReport::new("lemma2.r_at_0", n, "nonzero", nonzero_at(&pair.r, 0)),
        CheckReport::new("lemma2.r_at_1", n, "nonzero", nonzero_at(&pair.r, 1)),
    ]))
}

/// `T^a (T^b + 1)`
fn p_poly(a: usize, b: usize) -> Polynomial<Rationals> {
    &Polynomial::t_pow(Rationals, a + b) + &Polynomial::t_pow(Rationals, a)
}

fn residual_row(check: &str, n: usize, residual: &Polynomial<Rationals>) -> CheckReport {
    CheckReport::new(check, n, "0", poly_digest(residual))
}

/// `T - 1` up to the sign `(-1)^n`.
fn expected_delta(n: usize) -> Polynomial<Rationals> {
    let d = Polynomial::from_i64s(Rationals, &[-1, 1]);
    if n.is_multiple_of(2) {
        d
    } else {
        -d
    }
}

/// The identity `R_n S'_n - R'_n S_n = (-1)^n (T - 1)`, the four
/// recurrences linking index `n` to `n + 1`, and coprimality of both pairs.
///
/// Coprimality is certified from the identity: a common factor of `R_n`
/// and `S_n` divides `T - 1`, and `R_n(1) != 0`. It is cross-checked modulo
/// `2^61 - 1` up to [`MODULAR_GCD_LIMIT`] and by an exact gcd over `Q` up to
/// [`EXACT_GCD_LIMIT`].
pub fn check_lemma3(ctx: &Context, n: usize) -> Result<Vec<CheckReport>, VerifyError> {
    need(ctx, n + 2)?;
    let lab = ctx.lab();
    let (a, ap) = (ctx.lemma1_pair(n)?, ctx.lemma2_pair(n)?);
    let (b, bp) = (ctx.lemma1_pair(n + 1)?, ctx.lemma2_pair(n + 1)?);
    let (r, s, rp, sp) = (&a.r, &a.s, &ap.r, &ap.s);

    let delta = &(r * sp) - &(rp * s);
    let want = expected_delta(n);
    let mut rows = alloc::vec![CheckReport::new("lemma3.delta", n, &want, poly_digest(&delta))];

    let (l, lp, ln) = (lab.ell(n), lab.ell(n - 1), lab.ell(n + 1));
    let p = p_poly((ln + l - 1) / 2 + 1, ln + 1);
    let q = Polynomial::t_pow(Rationals, (l + lp + 3) / 2);
    rows.push(residual_row("lemma3.eq1", n, &(&bp.s - &(&(&p * &b.s) + sp))));
    rows.push(residual_row("lemma3.eq2", n, &(&b.s - &(&(&q * sp) - s))));
    rows.push(residual_row("lemma3.eq3", n, &(&bp.r - &(&(&p * &b.r) + rp))));
    rows.push(residual_row("lemma3.eq4", n, &(&b.r - &(&(&q * rp) - r))));

    let delta_ok = delta == want || delta == -&want;
    for (name, num, den) in [("lemma3.gcd_r_s", r, s), ("lemma3.gcd_rp_sp", rp, sp)] {
        let certified = delta_ok && nonzero_at(num, 1) == "nonzero";
        rows.push(CheckReport::new(name, n, "1", if certified { "1" } else { "uncertified" }));
        let deg = num.degree().unwrap_or(0).max(den.degree().unwrap_or(0));
        if deg <= MODULAR_GCD_LIMIT {
            let fp = PrimeField::new(COPRIMALITY_PRIME).expect("prime");
            let verdict = match coprime_mod_p(num, den, fp) {
                Some(true) => "1",
                Some(false) => "common factor mod p",
                None => "prime unusable",
            };
            rows.push(CheckReport::new(alloc::format!("{name}_modp"), n, "1", verdict));
        }
        if deg <= EXACT_GCD_LIMIT {
            let g = num.gcd(den)?;
            rows.push(CheckReport::new(alloc::format!("{name}_exact"), n, "1*T^0", g));
        }
    }
    Ok(collect(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(rows: &[CheckReport]) -> bool {
        rows.iter().all(|r| r.pass)
    }

    #[test]
    fn lemma1_small() {
        let ctx = Context::for_max_n(5);
        let rows = check_lemma1(&ctx, 1).unwrap();
        assert!(all_pass(&rows), "{rows:?}");
        let t = rows.iter().find(|r| r.check == "lemma1.t").unwrap();
        assert_eq!(t.actual, "10");
        let omega = rows.iter().find(|r| r.check == "lemma1.omega").unwrap();
        assert_eq!(omega.actual, "5/2");
        let rows = check_lemma1(&ctx, 2).unwrap();
        assert!(all_pass(&rows));
        assert_eq!(rows.iter().find(|r| r.check == "lemma1.t").unwrap().actual, "25");
    }

    #[test]
    fn lemma2_small() {
        let ctx = Context::for_max_n(5);
        let rows = check_lemma2(&ctx, 1).unwrap();
        assert!(all_pass(&rows), "{rows:?}");
        assert_eq!(rows.iter().find(|r| r.check == "lemma2.t").unwrap().actual, "15");
        assert_eq!(rows.iter().find(|r| r.check == "lemma2.omega").unwrap().actual, "15/7");
        let rows = check_lemma2(&ctx, 2).unwrap();
        assert!(all_pass(&rows));
        assert_eq!(rows.iter().find(|r| r.check == "lemma2.t").unwrap().actual, "37");
    }

    #[test]
    fn lemma3_small() {
        let ctx = Context::for_max_n(5);
        for n in 1..=4 {
            let rows = check_lemma3(&ctx, n).unwrap();
            assert!(all_pass(&rows), "{rows:?}");
        }
        let rows = check_lemma3(&ctx, 1).unwrap();
        assert_eq!(rows[0].actual, "-1*T^1 + 1*T^0");
    }

    #[test]
    fn corrupted_r1_fails() {
        let ctx = Context::for_max_n(3).with_corrupted_r1();
        assert!(!all_pass(&check_lemma1(&ctx, 1).unwrap()));
        assert!(!all_pass(&check_lemma3(&ctx, 1).unwrap()));
        assert!(all_pass(&check_lemma1(&ctx, 2).unwrap()));
    }

    #[test]
    fn short_ladder_reports_precision() {
        let ctx = Context::new(3);
        assert!(matches!(check_lemma2(&ctx, 1), Err(VerifyError::InsufficientPrecision { .. })));
    }
}
