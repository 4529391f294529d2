use alloc::vec::Vec;

use crate::arith::{Polynomial, Rational, Rationals};
use crate::error::VerifyError;
use crate::verify::pairs::make_lemma1_pair;
use crate::verify::report::{collect, CheckReport};
use crate::words::{Alphabet, WordLab};

/// First approximant pair under the alphabet `A -> a, B -> b`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphabetVariant {
    pub a: Rational,
    pub b: Rational,
    pub r1: Polynomial<Rationals>,
    pub s1: Polynomial<Rationals>,
    pub gcd: Polynomial<Rationals>,
}

impl AlphabetVariant {
    pub fn coprime(&self) -> bool {
        self.gcd.is_one()
    }
}

pub fn alphabet_variant(a: Rational, b: Rational) -> Result<AlphabetVariant, VerifyError> {
    let alphabet = Alphabet::new(Rationals, a.clone(), b.clone())?;
    let lab = WordLab::new(3);
    let pair = make_lemma1_pair(&lab, &alphabet, 1)?;
    let gcd = pair.r.gcd(&pair.s)?;
    Ok(AlphabetVariant { a, b, r1: pair.r, s1: pair.s, gcd })
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// `(1, 2)` keeps `R_1, S_1` coprime; `(1, -1)` makes `T - 1` a common factor.
pub fn check_remark() -> Result<Vec<CheckReport>, VerifyError> {
    let std = alphabet_variant(int(1), int(2))?;
    let alt = alphabet_variant(int(1), int(-1))?;
    let p = |c: &[i64]| Polynomial::from_i64s(Rationals, c);
    let t_minus_1 = p(&[-1, 1]);
    Ok(collect([
        CheckReport::new("remark.gcd_standard", 1, p(&[1]), &std.gcd),
        CheckReport::new("remark.r1_alt", 1, &p(&[-2, 0, 1]) * &t_minus_1, &alt.r1),
        CheckReport::new("remark.s1_alt", 1, &p(&[0, 0, 1]) * &p(&[-1, 0, 1]), &alt.s1),
        CheckReport::new("remark.gcd_alt", 1, &t_minus_1, &alt.gcd),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variants() {
        let rows = check_remark().unwrap();
        assert!(rows.iter().all(|r| r.pass), "{rows:?}");
        assert!(alphabet_variant(int(1), int(2)).unwrap().coprime());
        assert!(!alphabet_variant(int(1), int(-1)).unwrap().coprime());
        assert!(alphabet_variant(int(3), int(3)).is_err());
        let half = alphabet_variant(Rational::new(1.into(), 2.into()), int(1)).unwrap();
        assert_eq!(half.r1.degree(), Some(3));
    }
}
