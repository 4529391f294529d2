use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::arith::Rational;
use crate::error::ArithError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeasureTerm {
    pub n: usize,
    /// `2 + d_{n+1} / (d_1 + ... + d_n)`
    pub nu: Rational,
    /// Maximum of the `nu` values up to `n`.
    pub running_max: Rational,
}

/// The terms whose limsup is the irrationality measure, from the degrees
/// `d_1, ..., d_m` of the partial quotients.
pub fn measure_estimate(degrees: &[usize]) -> Result<Vec<MeasureTerm>, ArithError> {
    if degrees.len() < 2 {
        return Err(ArithError::InvalidArgument("at least two degrees are needed"));
    }
    if degrees.contains(&0) {
        return Err(ArithError::InvalidArgument("partial quotient degrees must be positive"));
    }
    let two = Rational::from_integer(BigInt::from(2));
    let mut sum = 0usize;
    let mut best: Option<Rational> = None;
    let mut out = Vec::with_capacity(degrees.len() - 1);
    for n in 1..degrees.len() {
        sum += degrees[n - 1];
        let nu = &two + Rational::new(BigInt::from(degrees[n]), BigInt::from(sum));
        let running_max = match best {
            Some(b) if b >= nu => b,
            _ => nu.clone(),
        };
        best = Some(running_max.clone());
        out.push(MeasureTerm { n, nu, running_max });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn bounded_quotients_tend_to_two() {
        let terms = measure_estimate(&[1; 6]).unwrap();
        for t in &terms {
            assert_eq!(t.nu, r(2 * t.n as i64 + 1, t.n as i64));
        }
        assert_eq!(terms[0].running_max, r(3, 1));
    }

    #[test]
    fn leading_degrees() {
        let terms = measure_estimate(&[1, 1, 1, 1, 2, 1, 1, 1, 7]).unwrap();
        assert_eq!(terms[3].nu, r(5, 2));
        assert_eq!(terms[7].nu, r(25, 9));
        assert_eq!(terms[7].running_max, r(3, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(measure_estimate(&[1]).is_err());
        assert!(measure_estimate(&[1, 0]).is_err());
    }
}
