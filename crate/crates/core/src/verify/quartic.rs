use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{Field, LaurentSeries, Polynomial, PrimeField, PrimeFieldElem};
use crate::cf::{cf_of_series, ContinuedFraction};
use crate::error::{ArithError, VerifyError};
use crate::verify::report::CheckReport;
use crate::words::w_prefix;

const MAX_STEPS: usize = 64;

/// Root of `x^4 + x^2 - T x + 1` with `|x| < 1` in `F_p((1/T))`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuarticRoot {
    /// Exact down to `T^-prec`.
    pub root: LaurentSeries<PrimeField>,
    /// Upper bound on the top exponent of the residual of the final iterate.
    pub residual_top: i64,
    pub steps: usize,
}

fn t_series(field: PrimeField, kd: i64) -> LaurentSeries<PrimeField> {
    LaurentSeries::from_polynomial(&Polynomial::t(field), kd)
}

fn constant(field: PrimeField, c: i64, kd: i64) -> LaurentSeries<PrimeField> {
    LaurentSeries::from_polynomial(&Polynomial::constant(field, field.from_i64(c)), kd)
}

/// `x^4 + x^2 - T x + 1`.
pub fn quartic_residual(x: &LaurentSeries<PrimeField>) -> LaurentSeries<PrimeField> {
    let field = *x.field();
    let deep = x.known_down() - 8;
    let x2 = x.mul(x);
    let x4 = x2.mul(&x2);
    x4.add(&x2).sub(&t_series(field, deep).mul(x)).add(&constant(field, 1, deep))
}

/// One step of `x <- (x^4 + x^2 + 1) / T`.
pub fn quartic_fixed_point_step(x: &LaurentSeries<PrimeField>) -> LaurentSeries<PrimeField> {
    let field = *x.field();
    let deep = x.known_down() - 8;
    let x2 = x.mul(x);
    let x4 = x2.mul(&x2);
    let inv_t = LaurentSeries::from_descending(field, -1, alloc::vec![field.one()], deep);
    x4.add(&x2).add(&constant(field, 1, deep)).mul(&inv_t)
}

/// The iterate seen as an exact element: its coefficients down to `-w`,
/// zero below.
fn as_exact(x: &LaurentSeries<PrimeField>, w: i64) -> LaurentSeries<PrimeField> {
    let field = *x.field();
    let top = x.top_exponent().unwrap_or(-1);
    LaurentSeries::from_descending(field, top, x.coeffs().to_vec(), -w).truncate(-w)
}

/// Newton iteration `x <- x - f(x)/f'(x)` from `x = 0`, the working depth
/// doubling each step up to `prec + 4`.
///
/// Each iterate is certified from its residual: `f(x) = (x - root) g` with
/// `|g| = |T|`, so the iterate agrees with the root at every exponent at or
/// above the top exponent of `f(x)`.
pub fn quartic_root(p: u64, prec: usize) -> Result<QuarticRoot, VerifyError> {
    if prec == 0 {
        return Err(VerifyError::InvalidArgument("precision must be at least 1"));
    }
    let field = PrimeField::new(p)?;
    let full = prec as i64 + 4;
    let mut x = LaurentSeries::zero(field, -full);
    for step in 0..MAX_STEPS {
        let w = full.min(4i64 << step.min(40));
        let xs = as_exact(&x, w);
        let f = quartic_residual(&xs);
        let exact_from = f.top_exponent().unwrap_or(f.known_down() - 1);
        if w == full && exact_from <= -(prec as i64) {
            return Ok(QuarticRoot { root: xs.truncate(-(prec as i64)), residual_top: exact_from, steps: step });
        }
        let x2 = xs.mul(&xs);
        let deep = xs.known_down() - 8;
        let fprime =
            xs.mul(&x2).scale(&field.from_i64(4)).add(&xs.scale(&field.from_i64(2))).sub(&t_series(field, deep));
        let delta = f.mul(&fprime.invert()?);
        x = as_exact(&xs.sub(&delta), w);
    }
    Err(ArithError::PrecisionExhausted.into())
}

/// Certified expansion of the root and its partial quotients `lambda T^u`.
#[derive(Clone, Debug)]
pub struct QuarticExpansion {
    pub root: QuarticRoot,
    pub cf: ContinuedFraction<PrimeField>,
    /// `(lambda_i, u_i)` for every certified monomial partial quotient.
    pub monomials: Vec<(PrimeFieldElem, usize)>,
}

pub fn quartic_expansion(p: u64, prec: usize) -> Result<QuarticExpansion, VerifyError> {
    let root = quartic_root(p, prec)?;
    let cf = cf_of_series(&root.root)?.cf;
    let monomials = cf.quotients()[1..].iter().map_while(|a| a.as_monomial()).collect();
    Ok(QuarticExpansion { root, cf, monomials })
}

/// Over `F_3`: the residual vanishes to `T^-prec`, every certified partial
/// quotient is `lambda T^u` with `lambda in {1, 2}`, at least `k` are
/// certified, and `lambda_1 .. lambda_k` spell the first `k` letters of `W`.
pub fn quartic_lambda_check(prec: usize, k: usize) -> Result<(QuarticExpansion, Vec<CheckReport>), VerifyError> {
    let exp = quartic_expansion(3, prec)?;
    let field = *exp.root.root.field();
    // root known to T^-prec fixes the residual down to T^(1-prec)
    let kd = 1 - prec as i64;
    let residual = quartic_residual(&exp.root.root).truncate(kd);
    let zero = LaurentSeries::zero(field, kd);
    let certified = exp.cf.len();
    let good = exp.monomials.iter().filter(|(l, _)| matches!(l.residue(), 1 | 2)).count();
    let digits: String = exp.monomials.iter().take(k).map(|(l, _)| digit(l.residue())).collect();
    let rows = alloc::vec![
        CheckReport::new("quartic.residual", prec, &zero, &residual),
        CheckReport::new("quartic.a0", prec, "0", exp.cf.a0()),
        CheckReport::new("quartic.certified", prec, k, certified.min(k)),
        CheckReport::new("quartic.monomial", prec, certified, good),
        CheckReport::new("quartic.lambda", k, w_prefix(k), digits),
    ];
    Ok((exp, rows))
}

fn digit(r: u64) -> char {
    match r {
        1 => '1',
        2 => '2',
        _ => '?',
    }
}

/// `u_1, u_2, ...` as a comma-separated list.
pub fn exponent_list(exp: &QuarticExpansion) -> String {
    let parts: Vec<String> = exp.monomials.iter().map(|(_, u)| format!("{u}")).collect();
    parts.join(",")
}
