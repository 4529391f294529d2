use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{Field, Polynomial};

/// One comparison between a predicted and a computed value, both in
/// canonical text form. `pass` holds exactly when the two strings agree.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, n: usize, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Self { check: check.into(), n, expected, actual, pass }
    }

    /// Row for a failure to even compute the value.
    pub fn error(check: impl Into<String>, n: usize, expected: impl ToString, err: impl fmt::Display) -> Self {
        Self::new(check, n, expected, format!("error: {err}"))
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{mark} {} n={}", self.check, self.n)?;
        if self.pass {
            write!(f, " value={}", self.actual)
        } else {
            write!(f, " expected={} actual={}", self.expected, self.actual)
        }
    }
}

/// Sort by `(check, n)` so that merged reports are deterministic.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| (a.check.as_str(), a.n).cmp(&(b.check.as_str(), b.n)));
}

/// `(passed, total)`.
pub fn tally(reports: &[CheckReport]) -> (usize, usize) {
    (reports.iter().filter(|r| r.pass).count(), reports.len())
}

/// Full text for small polynomials, a degree/term-count digest for large
/// ones, so that failing rows stay readable.
pub fn poly_digest<F: Field>(p: &Polynomial<F>) -> String {
    match p.degree() {
        Some(d) if p.term_count() > 12 => format!("<degree {d}, {} terms>", p.term_count()),
        _ => p.to_string(),
    }
}

pub(crate) fn collect<I: IntoIterator<Item = CheckReport>>(rows: I) -> Vec<CheckReport> {
    let mut v: Vec<_> = rows.into_iter().collect();
    sort_reports(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rationals;

    #[test]
    fn pass_iff_equal() {
        assert!(CheckReport::new("x", 1, "5/2", "5/2").pass);
        assert!(!CheckReport::new("x", 1, 10, 11).pass);
    }

    #[test]
    fn ordering() {
        let mut v = alloc::vec![
            CheckReport::new("b", 1, 0, 0),
            CheckReport::new("a", 10, 0, 0),
            CheckReport::new("a", 2, 0, 0),
        ];
        sort_reports(&mut v);
        let keys: Vec<_> = v.iter().map(|r| (r.check.as_str(), r.n)).collect();
        assert_eq!(keys, [("a", 2), ("a", 10), ("b", 1)]);
    }

    #[test]
    fn digests() {
        let small = Polynomial::from_i64s(Rationals, &[1, -1]);
        assert_eq!(poly_digest(&small), "-1*T^1 + 1*T^0");
        let big = Polynomial::from_i64s(Rationals, &[1; 20]);
        assert_eq!(poly_digest(&big), "<degree 19, 20 terms>");
    }
}
