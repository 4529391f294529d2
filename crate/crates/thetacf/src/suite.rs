//! Runs groups of checks on a worker pool and merges their reports.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, Context as _, Result};
use rayon::prelude::*;
use thetacf_core::verify::{
    check_conjecture, check_corollary, check_lemma1, check_lemma2, check_lemma3, check_remark, check_theorem3,
    quartic_lambda_check, sort_reports, CheckReport, Context, ThetaExpansion,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Lemma1,
    Lemma2,
    Lemma3,
    Theorem3,
    Corollary,
    Conjecture,
    Quartic,
    Remark,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 9] =
        ["lemma1", "lemma2", "lemma3", "theorem3", "corollary", "conjecture", "quartic", "remark", "all"];

    fn expand(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![Lemma1, Lemma2, Lemma3, Theorem3, Corollary, Conjecture, Quartic, Remark],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        use Suite::*;
        Ok(match s {
            "lemma1" => Lemma1,
            "lemma2" => Lemma2,
            "lemma3" => Lemma3,
            "theorem3" => Theorem3,
            "corollary" => Corollary,
            "conjecture" => Conjecture,
            "quartic" => Quartic,
            "remark" => Remark,
            "all" => All,
            _ => return Err(anyhow!("unknown suite `{s}` (expected one of {})", Suite::NAMES.join(", "))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Suite::NAMES[*self as usize])
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_n: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub corrupt_r1: bool,
    pub quartic_prec: usize,
    pub quartic_k: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { max_n: 6, jobs: 0, corrupt_r1: false, quartic_prec: 1000, quartic_k: 100 }
    }
}

/// One independent unit of work.
#[derive(Clone, Copy, Debug)]
enum Task {
    Lemma1(usize),
    Lemma2(usize),
    Lemma3(usize),
    /// The degree, measure and conjecture suites share one expansion.
    Expansion {
        theorem: bool,
        corollary: bool,
        conjecture: bool,
    },
    Quartic,
    Remark,
}

fn plan(suites: &[Suite], max_n: usize) -> Vec<Task> {
    let mut wanted: Vec<Suite> = suites.iter().flat_map(|s| s.expand()).collect();
    wanted.sort();
    wanted.dedup();
    let mut tasks = Vec::new();
    for s in &wanted {
        match s {
            Suite::Lemma1 => tasks.extend((1..=max_n).map(Task::Lemma1)),
            Suite::Lemma2 => tasks.extend((1..=max_n).map(Task::Lemma2)),
            Suite::Lemma3 => tasks.extend((1..=max_n).map(Task::Lemma3)),
            Suite::Quartic => tasks.push(Task::Quartic),
            Suite::Remark => tasks.push(Task::Remark),
            _ => {}
        }
    }
    let theorem = wanted.contains(&Suite::Theorem3);
    let corollary = wanted.contains(&Suite::Corollary);
    let conjecture = wanted.contains(&Suite::Conjecture);
    if theorem || corollary || conjecture {
        tasks.push(Task::Expansion { theorem, corollary, conjecture });
    }
    tasks
}

fn run_task(ctx: &Context, cfg: &SuiteConfig, task: Task) -> Result<Vec<CheckReport>> {
    Ok(match task {
        Task::Lemma1(n) => check_lemma1(ctx, n).with_context(|| format!("lemma1 at n = {n}"))?,
        Task::Lemma2(n) => check_lemma2(ctx, n).with_context(|| format!("lemma2 at n = {n}"))?,
        Task::Lemma3(n) => check_lemma3(ctx, n).with_context(|| format!("lemma3 at n = {n}"))?,
        Task::Expansion { theorem, corollary, conjecture } => {
            let exp = ThetaExpansion::new(ctx, cfg.max_n).context("expanding theta")?;
            let mut rows = Vec::new();
            if theorem {
                rows.extend(check_theorem3(ctx, &exp, true).context("theorem3")?);
            }
            if corollary {
                rows.extend(check_corollary(&exp, cfg.max_n).context("corollary")?);
            }
            if conjecture {
                rows.extend(check_conjecture(ctx, &exp, cfg.max_n).context("conjecture")?.1);
            }
            rows
        }
        Task::Quartic => quartic_lambda_check(cfg.quartic_prec, cfg.quartic_k).context("quartic")?.1,
        Task::Remark => check_remark().context("remark")?,
    })
}

/// Run the requested suites for `n = 1..=max_n`; rows come back sorted by
/// check id and `n` whatever the pool size.
pub fn run(suites: &[Suite], cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    if cfg.max_n == 0 {
        return Err(anyhow!("--max-n must be at least 1"));
    }
    let mut ctx = Context::for_max_n(cfg.max_n);
    if cfg.corrupt_r1 {
        ctx = ctx.with_corrupted_r1();
    }
    let tasks = plan(suites, cfg.max_n);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    let parts: Vec<Result<Vec<CheckReport>>> =
        pool.install(|| tasks.par_iter().map(|&t| run_task(&ctx, cfg, t)).collect());
    let mut rows = Vec::new();
    for p in parts {
        rows.extend(p?);
    }
    sort_reports(&mut rows);
    Ok(rows)
}
