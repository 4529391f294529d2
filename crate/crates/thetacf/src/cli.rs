use std::path::PathBuf;

use anyhow::{anyhow, bail, Context as _, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use thetacf_core::cf::{cf_of_ratfunc, measure_estimate};
use thetacf_core::verify::{
    alphabet_variant, check_remark, exponent_list, quartic_expansion, quartic_lambda_check, CheckReport, Context,
    ThetaExpansion,
};
use thetacf_core::words::{series_of_prefix, w_prefix, WordLab};
use thetacf_core::{Alphabet, ContinuedFraction, Field, Rational, RationalFunction, Rationals, Word};

use crate::field::FieldChoice;
use crate::render::{self, Format};
use crate::suite::{self, Suite, SuiteConfig};

#[derive(Debug, Parser)]
#[command(name = "thetacf", version, about = "Continued fractions in K((1/T)) and their verification suite")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for `verify` (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print W_n or a prefix of W.
    Word(WordArgs),
    /// Coefficients of theta = sum w(k) T^-k down to T^-prec.
    Theta(ThetaArgs),
    /// Partial quotients of theta or of a rational function.
    Cf(CfArgs),
    /// Convergent table of theta or of a rational function.
    Convergents(CfArgs),
    /// Irrationality-measure terms from partial-quotient degrees.
    Measure(MeasureArgs),
    /// Run check suites over n = 1..=max-n.
    Verify(VerifyArgs),
    /// Root of x^4 + x^2 - T x + 1 in F_p((1/T)) and its partial quotients.
    Quartic(QuarticArgs),
    /// First approximant pair under another alphabet.
    Alphabet(AlphabetArgs),
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Index of W_n.
    #[arg(long, conflicts_with = "prefix")]
    pub n: Option<usize>,
    /// Length of the prefix of W.
    #[arg(long)]
    pub prefix: Option<usize>,
    /// Letter values `a,b` (comma-separated output).
    #[arg(long)]
    pub alphabet: Option<String>,
}

#[derive(Debug, Args)]
pub struct ThetaArgs {
    #[arg(long, default_value_t = 20)]
    pub prec: usize,
    #[arg(long, default_value = "Q")]
    pub field: FieldChoice,
    #[arg(long)]
    pub alphabet: Option<String>,
}

#[derive(Debug, Args)]
pub struct CfArgs {
    /// `(num)/(den)` in the polynomial text form; theta when absent.
    #[arg(long)]
    pub ratfunc: Option<String>,
    #[arg(long, default_value = "Q")]
    pub field: FieldChoice,
    /// Theta is read off R_{m}/S_{m} with m = max-n + 1.
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    /// Comma-separated degrees; theta's degrees when absent.
    #[arg(long, value_delimiter = ',')]
    pub degrees: Option<Vec<usize>>,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// lemma1, lemma2, lemma3, theorem3, corollary, conjecture, quartic, remark or all.
    #[arg(required = true)]
    pub suites: Vec<Suite>,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Deliberately corrupt an input (`r1`: use R_1 + 1).
    #[arg(long)]
    pub inject_fault: Option<String>,
    /// Precision of the quartic suite.
    #[arg(long, default_value_t = 1000)]
    pub prec: usize,
    /// Number of quartic lambdas compared with W.
    #[arg(long, default_value_t = 100)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct QuarticArgs {
    #[arg(long, default_value_t = 1000)]
    pub prec: usize,
    #[arg(long, default_value_t = 100)]
    pub k: usize,
    /// Characteristic; the lambda comparison with W only applies to 3.
    #[arg(long, default_value_t = 3)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct AlphabetArgs {
    #[arg(long, requires = "b", value_parser = parse_rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, requires = "a", value_parser = parse_rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rationals.parse_elem(s).map_err(|e| e.to_string())
}

/// What a command produced: the main output and, for checks, the rows
/// that decide the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub body: String,
    pub reports: Option<Vec<CheckReport>>,
}

impl Outcome {
    fn plain(body: String) -> Self {
        Self { body, reports: None }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let format = cli.format;
    match &cli.command {
        Command::Word(a) => word(a, format),
        Command::Theta(a) => match a.field {
            FieldChoice::Q => theta(Rationals, a, format),
            FieldChoice::Fp(f) => theta(f, a, format),
        },
        Command::Cf(a) => cf_command(a, format, false),
        Command::Convergents(a) => cf_command(a, format, true),
        Command::Measure(a) => measure(a, format),
        Command::Verify(a) => verify(a, cli.jobs, format),
        Command::Quartic(a) => quartic(a, format),
        Command::Alphabet(a) => alphabet(a, format),
    }
}

fn parse_alphabet<F: Field>(field: F, spec: Option<&str>) -> Result<Alphabet<F>> {
    let Some(spec) = spec else {
        return Ok(Alphabet::standard(field)?);
    };
    let (a, b) = spec.split_once(',').ok_or_else(|| anyhow!("alphabet must be `a,b`"))?;
    let a = field.parse_elem(a)?;
    let b = field.parse_elem(b)?;
    Ok(Alphabet::new(field, a, b)?)
}

fn word(a: &WordArgs, format: Format) -> Result<Outcome> {
    let w: Word = match (a.n, a.prefix) {
        (Some(n), _) => WordLab::new(n).w(n)?.into(),
        (None, Some(len)) => w_prefix(len),
        (None, None) => bail!("give --n or --prefix"),
    };
    let text = match &a.alphabet {
        Some(spec) => w.render_with(&parse_alphabet(Rationals, Some(spec))?),
        None => w.to_string(),
    };
    Ok(Outcome::plain(match format {
        Format::Text => format!("{text}\n"),
        Format::Json => render::json(&json!({"n": a.n, "length": w.len(), "word": text})),
    }))
}

fn theta<F: Field>(field: F, a: &ThetaArgs, format: Format) -> Result<Outcome>
where
    F::Elem: std::fmt::Display,
{
    if a.prec == 0 {
        bail!("--prec must be at least 1");
    }
    let alphabet = parse_alphabet(field, a.alphabet.as_deref())?;
    let series = series_of_prefix(&w_prefix(a.prec), &alphabet);
    Ok(Outcome::plain(match format {
        Format::Text => format!("{series}\n"),
        Format::Json => {
            let coeffs: Vec<String> =
                (1..=a.prec as i64).map(|k| series.coeff(-k).expect("within precision").to_string()).collect();
            render::json(&json!({"top": -1, "known_down": -(a.prec as i64), "coeffs": coeffs}))
        }
    }))
}

fn theta_cf(max_n: usize) -> Result<ContinuedFraction<Rationals>> {
    let ctx = Context::for_max_n(max_n);
    Ok(ThetaExpansion::new(&ctx, max_n)?.cf)
}

fn cf_command(a: &CfArgs, format: Format, table: bool) -> Result<Outcome> {
    fn emit<F: Field>(cf: &ContinuedFraction<F>, format: Format, table: bool) -> String {
        if table {
            render::convergents(&cf.convergents(), format)
        } else {
            render::continued_fraction(cf, format)
        }
    }
    let body = match (&a.ratfunc, a.field) {
        (None, FieldChoice::Q) => emit(&theta_cf(a.max_n)?, format, table),
        (None, FieldChoice::Fp(_)) => bail!("theta's expansion is computed over Q; pass --ratfunc for F_p"),
        (Some(s), FieldChoice::Q) => {
            let f = RationalFunction::parse(Rationals, s).with_context(|| format!("parsing `{s}`"))?;
            emit(&cf_of_ratfunc(&f), format, table)
        }
        (Some(s), FieldChoice::Fp(p)) => {
            let f = RationalFunction::parse(p, s).with_context(|| format!("parsing `{s}`"))?;
            emit(&cf_of_ratfunc(&f), format, table)
        }
    };
    Ok(Outcome::plain(body))
}

fn measure(a: &MeasureArgs, format: Format) -> Result<Outcome> {
    let degrees = match &a.degrees {
        Some(d) => d.clone(),
        None => theta_cf(a.max_n)?.degrees(),
    };
    Ok(Outcome::plain(render::measure(&measure_estimate(&degrees)?, format)))
}

fn verify(a: &VerifyArgs, jobs: usize, format: Format) -> Result<Outcome> {
    let corrupt_r1 = match a.inject_fault.as_deref() {
        None => false,
        Some("r1") => true,
        Some(other) => bail!("unknown fault `{other}` (expected r1)"),
    };
    let cfg = SuiteConfig { max_n: a.max_n, jobs, corrupt_r1, quartic_prec: a.prec, quartic_k: a.k };
    let rows = suite::run(&a.suites, &cfg)?;
    Ok(Outcome { body: render::reports(&rows, format), reports: Some(rows) })
}

fn quartic(a: &QuarticArgs, format: Format) -> Result<Outcome> {
    let (exp, rows) = if a.p == 3 {
        let (exp, rows) = quartic_lambda_check(a.prec, a.k)?;
        (exp, Some(rows))
    } else {
        (quartic_expansion(a.p, a.prec)?, None)
    };
    let lambdas: Vec<String> = exp.monomials.iter().map(|(l, _)| l.to_string()).collect();
    let body = match format {
        Format::Text => {
            let mut out = format!(
                "newton steps: {}\ncertified partial quotients: {}\nlambdas: {}\nexponents: {}\n",
                exp.root.steps,
                exp.cf.len(),
                lambdas.concat(),
                exponent_list(&exp)
            );
            if let Some(rows) = &rows {
                out.push_str(&render::reports(rows, format));
            }
            out
        }
        Format::Json => render::json(&json!({
            "p": a.p,
            "prec": a.prec,
            "certified": exp.cf.len(),
            "quotients": render::quotient_strings(&exp.cf),
            "reports": rows,
        })),
    };
    Ok(Outcome { body, reports: rows })
}

fn alphabet(a: &AlphabetArgs, format: Format) -> Result<Outcome> {
    let (Some(x), Some(y)) = (&a.a, &a.b) else {
        let rows = check_remark()?;
        return Ok(Outcome { body: render::reports(&rows, format), reports: Some(rows) });
    };
    let v = alphabet_variant(x.clone(), y.clone())?;
    Ok(Outcome::plain(match format {
        Format::Text => format!("R1 = {}\nS1 = {}\ngcd = {}\ncoprime = {}\n", v.r1, v.s1, v.gcd, v.coprime()),
        Format::Json => render::json(&json!({
            "a": v.a.to_string(),
            "b": v.b.to_string(),
            "R1": v.r1.to_string(),
            "S1": v.s1.to_string(),
            "gcd": v.gcd.to_string(),
            "coprime": v.coprime(),
        })),
    }))
}
