//! Text and JSON forms of reports and expansions.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use thetacf_core::cf::MeasureTerm;
use thetacf_core::verify::{tally, CheckReport};
use thetacf_core::{ContinuedFraction, ConvergentTable, Field};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// `PASS k/m`, printed after every suite.
pub fn summary_line(rows: &[CheckReport]) -> String {
    let (k, m) = tally(rows);
    format!("PASS {k}/{m}")
}

pub fn reports(rows: &[CheckReport], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in rows {
                writeln!(out, "{r}").unwrap();
            }
            out
        }
        Format::Json => json(rows),
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn quotient_strings<F: Field>(cf: &ContinuedFraction<F>) -> Vec<String> {
    cf.quotients().iter().map(|a| a.to_string()).collect()
}

pub fn continued_fraction<F: Field>(cf: &ContinuedFraction<F>, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (i, a) in cf.quotients().iter().enumerate() {
                writeln!(out, "a{i} = {a}").unwrap();
            }
            out
        }
        Format::Json => json(&quotient_strings(cf)),
    }
}

#[derive(Serialize)]
struct ConvergentRow {
    n: usize,
    x: String,
    y: String,
    #[serde(rename = "degY")]
    deg_y: usize,
}

pub fn convergents<F: Field>(table: &ConvergentTable<F>, format: Format) -> String {
    let rows: Vec<ConvergentRow> = table
        .rows()
        .iter()
        .enumerate()
        .map(|(n, (x, y))| ConvergentRow { n, x: x.to_string(), y: y.to_string(), deg_y: y.degree().unwrap_or(0) })
        .collect();
    match format {
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                writeln!(out, "n={} degY={} x={} y={}", r.n, r.deg_y, r.x, r.y).unwrap();
            }
            out
        }
        Format::Json => json(&rows),
    }
}

pub fn measure(terms: &[MeasureTerm], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for t in terms {
                writeln!(out, "n={} nu={} max={}", t.n, t.nu, t.running_max).unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = terms
                .iter()
                .map(|t| serde_json::json!({"n": t.n, "nu": t.nu.to_string(), "max": t.running_max.to_string()}))
                .collect();
            json(&rows)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use thetacf_core::cf::cf_of_ratfunc;
    use thetacf_core::{RationalFunction, Rationals};

    #[test]
    fn json_reports_parse_back() {
        let rows = vec![CheckReport::new("a", 1, "1/2", "1/2"), CheckReport::new("b", 2, "x", "y")];
        let back: Vec<CheckReport> = serde_json::from_str(&reports(&rows, Format::Json)).unwrap();
        assert_eq!(back, rows);
        assert_eq!(summary_line(&rows), "PASS 1/2");
    }

    #[test]
    fn cf_forms() {
        let f = RationalFunction::parse(Rationals, "(T^3+2*T^2+T-1)/(T^4-T^2)").unwrap();
        let cf = cf_of_ratfunc(&f);
        let arr: Vec<String> = serde_json::from_str(&continued_fraction(&cf, Format::Json)).unwrap();
        assert_eq!(arr[1], "1*T^1 - 2*T^0");
        assert!(continued_fraction(&cf, Format::Text).starts_with("a0 = 0\na1 = 1*T^1 - 2*T^0\n"));
        let conv: Value = serde_json::from_str(&convergents(&cf.convergents(), Format::Json)).unwrap();
        assert_eq!(conv[4]["degY"], 4);
    }
}
