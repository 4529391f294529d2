//! Text form of polynomials: a sum of `c*T^k` terms in descending degree,
//! e.g. `-125/48*T^1 + 25/24*T^0`. The parser also accepts the looser
//! hand-written forms `T^3+2*T^2+T-1` and `2T`.

use alloc::string::String;
use core::fmt;

use crate::arith::field::Field;
use crate::arith::poly::Polynomial;
use crate::error::ParseError;

struct Elem<'a, F: Field>(&'a F, &'a F::Elem);

impl<F: Field> fmt::Display for Elem<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write_elem(self.1, f)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let field = self.field();
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            if first {
                write!(f, "{}*T^{k}", Elem(field, c))?;
                first = false;
            } else if field.is_negative_repr(c) {
                write!(f, " - {}*T^{k}", Elem(field, &field.neg(c)))?;
            } else {
                write!(f, " + {}*T^{k}", Elem(field, c))?;
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::new(self.pos, msg)
    }
}

impl<F: Field> Polynomial<F> {
    /// Parse the text form over `field`.
    pub fn parse(field: F, s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor { src: s, pos: 0 };
        let mut acc = Polynomial::zero(field.clone());
        let mut first = true;
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                if first {
                    return Err(cur.err("empty polynomial"));
                }
                break;
            }
            let negative = if cur.eat(b'-') {
                true
            } else if cur.eat(b'+') || first {
                false
            } else {
                return Err(cur.err("expected `+` or `-`"));
            };
            // "a - -3*T^0" style double signs are accepted
            let negative = if cur.eat(b'-') { !negative } else { negative };
            let (coeff, deg) = parse_term(&field, &mut cur)?;
            let coeff = if negative { field.neg(&coeff) } else { coeff };
            acc = &acc + &Polynomial::monomial(field.clone(), coeff, deg);
            first = false;
        }
        Ok(acc)
    }
}

fn parse_term<F: Field>(field: &F, cur: &mut Cursor<'_>) -> Result<(F::Elem, usize), ParseError> {
    let mut coeff = None;
    if let Some(num) = cur.digits() {
        let mut c = field.parse_elem(num)?;
        if cur.eat(b'/') {
            let den = cur.digits().ok_or_else(|| cur.err("expected denominator"))?;
            let den = field.parse_elem(den)?;
            let inv = field.inv(&den).ok_or_else(|| cur.err("zero denominator"))?;
            c = field.mul(&c, &inv);
        }
        coeff = Some(c);
        cur.eat(b'*');
    }
    let has_t = cur.eat(b'T') || cur.eat(b't');
    if !has_t {
        return coeff.map(|c| (c, 0)).ok_or_else(|| cur.err("expected coefficient or `T`"));
    }
    let deg = if cur.eat(b'^') {
        let d = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
        d.parse::<usize>().map_err(|_| cur.err("exponent out of range"))?
    } else {
        1
    };
    Ok((coeff.unwrap_or_else(|| field.one()), deg))
}

/// Render a list of polynomials as `[p0, p1, ...]`.
pub fn format_list<F: Field>(items: &[Polynomial<F>]) -> String {
    use core::fmt::Write;
    let mut out = String::from("[");
    for (i, p) in items.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        let _ = write!(out, "{p}");
    }
    out.push(']');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::field::{PrimeField, Rational, Rationals};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(c: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, c)
    }

    #[test]
    fn canonical_form() {
        let a4 = Polynomial::new(
            Rationals,
            vec![Rational::new(25.into(), 24.into()), Rational::new((-125).into(), 48.into())],
        );
        assert_eq!(a4.to_string(), "-125/48*T^1 + 25/24*T^0");
        assert_eq!(q(&[-1, 1, 2, 1]).to_string(), "1*T^3 + 2*T^2 + 1*T^1 - 1*T^0");
        assert_eq!(q(&[]).to_string(), "0");
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(Polynomial::from_i64s(f3, &[-1, 0, 2]).to_string(), "2*T^2 + 2*T^0");
    }

    #[test]
    fn loose_forms() {
        assert_eq!(Polynomial::parse(Rationals, "T^3+2*T^2+T-1").unwrap(), q(&[-1, 1, 2, 1]));
        assert_eq!(Polynomial::parse(Rationals, " - 2T + 3 ").unwrap(), q(&[3, -2]));
        assert_eq!(Polynomial::parse(Rationals, "T^4 - T^2").unwrap(), q(&[0, 0, -1, 0, 1]));
        assert_eq!(
            Polynomial::parse(Rationals, "1/2*T - 1/2").unwrap(),
            q(&[-1, 1]).scale(&Rational::new(1.into(), 2.into()))
        );
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(Polynomial::parse(f3, "1/2*T^1").unwrap(), Polynomial::from_i64s(f3, &[0, 2]));
        assert!(Polynomial::parse(Rationals, "").is_err());
        assert!(Polynomial::parse(Rationals, "T^").is_err());
        assert!(Polynomial::parse(Rationals, "3 3").is_err());
        assert!(Polynomial::parse(Rationals, "x").is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(coeffs in proptest::collection::vec((-50i64..50, 1i64..20), 0..12)) {
            let c = coeffs.iter().map(|&(n, d)| Rational::new(n.into(), d.into())).collect();
            let p = Polynomial::new(Rationals, c);
            let text = p.to_string();
            let back = Polynomial::parse(Rationals, &text).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), text);
        }
    }
}
