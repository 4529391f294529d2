use core::fmt;

use crate::arith::field::Field;
use crate::arith::poly::Polynomial;
use crate::error::{ArithError, ParseError};

/// Element of `K(T)` in canonical form: coprime numerator and denominator,
/// denominator monic.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<F: Field> {
    num: Polynomial<F>,
    den: Polynomial<F>,
}

impl<F: Field> RationalFunction<F> {
    /// Reduce `num / den` to canonical form.
    pub fn new(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, ArithError> {
        num.same_field(&den)?;
        if den.is_zero() {
            return Err(ArithError::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self { den: Polynomial::one(num.field().clone()), num });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_one() { (num, den) } else { (num.exact_div(&g)?, den.exact_div(&g)?) };
        Ok(Self::with_monic_den(num, den))
    }

    /// Canonical form for a pair already known to be coprime; only the
    /// denominator is made monic. Used for the large approximants whose
    /// coprimality is certified separately.
    pub fn from_coprime(num: Polynomial<F>, den: Polynomial<F>) -> Result<Self, ArithError> {
        num.same_field(&den)?;
        if den.is_zero() {
            return Err(ArithError::ZeroDivisor);
        }
        Ok(Self::with_monic_den(num, den))
    }

    /// `num / T^k`, reduced by cancelling the common power of `T`.
    pub fn over_t_power(num: Polynomial<F>, k: usize) -> Self {
        let field = num.field().clone();
        if num.is_zero() {
            return Self { num, den: Polynomial::one(field) };
        }
        let v = num.t_adic_valuation().unwrap_or(0).min(k);
        let num = num.unshift(v);
        Self { num, den: Polynomial::t_pow(field, k - v) }
    }

    pub fn from_polynomial(p: Polynomial<F>) -> Self {
        let one = Polynomial::one(p.field().clone());
        Self { num: p, den: one }
    }

    fn with_monic_den(num: Polynomial<F>, den: Polynomial<F>) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        let field = den.field().clone();
        if field.is_one(&lc) {
            return Self { num, den };
        }
        let inv = field.inv(&lc).expect("nonzero leading coefficient");
        Self { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn num(&self) -> &Polynomial<F> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<F> {
        &self.den
    }

    pub fn field(&self) -> &F {
        self.num.field()
    }

    pub fn into_parts(self) -> (Polynomial<F>, Polynomial<F>) {
        (self.num, self.den)
    }

    /// `deg num - deg den`, `None` for zero: the exponent of the leading
    /// term of the expansion in `1/T`.
    pub fn top_exponent(&self) -> Option<i64> {
        let dn = self.num.degree()? as i64;
        Some(dn - self.den.degree().expect("nonzero denominator") as i64)
    }

    /// Parse `(num)/(den)` or a bare polynomial.
    pub fn parse(field: F, s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let (num, den) = match split_quotient(s) {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = Polynomial::parse(field.clone(), strip_parens(num))?;
        let den = match den {
            Some(d) => Polynomial::parse(field, strip_parens(d))?,
            None => Polynomial::one(field),
        };
        Self::new(num, den).map_err(|e| ParseError::new(0, alloc::format!("{e}")))
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).map(str::trim).unwrap_or(s)
}

/// Split `(a)/(b)` at the top-level slash that follows a closing parenthesis.
fn split_quotient(s: &str) -> Option<(&str, &str)> {
    if !s.starts_with('(') {
        return None;
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    let rest = s[i + 1..].trim_start();
                    return rest.strip_prefix('/').map(|d| (&s[..=i], d));
                }
            }
            _ => {}
        }
    }
    None
}

impl<F: Field> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}
