use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};
use thetacf_core::PrimeField;

/// Coefficient field named on the command line: `Q` or `F<p>`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FieldChoice {
    #[default]
    Q,
    Fp(PrimeField),
}

impl FromStr for FieldChoice {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Self::Q);
        }
        let digits = s
            .strip_prefix("GF")
            .or_else(|| s.strip_prefix('F'))
            .or_else(|| s.strip_prefix('f'))
            .ok_or_else(|| anyhow!("unknown field `{s}` (expected Q or F<p>)"))?;
        let p: u64 = digits.parse().map_err(|_| anyhow!("bad modulus in `{s}`"))?;
        match PrimeField::new(p) {
            Ok(f) => Ok(Self::Fp(f)),
            Err(e) => bail!("field `{s}`: {e}"),
        }
    }
}

impl fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Q => f.write_str("Q"),
            Self::Fp(p) => write!(f, "F{}", p.modulus()),
        }
    }
}
