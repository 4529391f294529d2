use alloc::vec::Vec;

use crate::error::WordError;
use crate::words::factors::{u_word, v_word, AuxWords};
use crate::words::ladder::WordLab;
use crate::words::word::{bullet_first, bullet_last, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: &'static str,
    pub n: usize,
    pub outcome: Outcome,
}

/// Word identities at index `n`, plus the residuals `A_n`, `B_n` with
/// `W_{n-1} 2 W_n 2 W_{n+2} = J_n A_n` and `U'_n = J_n B_n`.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub n: usize,
    pub results: Vec<IdentityResult>,
    pub a: Option<Word>,
    pub b: Option<Word>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.outcome != Outcome::Fail)
    }
}

const TWO: &[Letter] = &[Letter::B];

fn strip<'a>(word: &'a [Letter], prefix: &[Letter]) -> Option<&'a [Letter]> {
    word.strip_prefix(prefix)
}

/// Checks every identity at `n >= 1`; needs `lab.top() >= n + 3`.
pub fn word_identities(lab: &WordLab, n: usize) -> Result<IdentityReport, WordError> {
    assert!(n >= 1, "identities start at n = 1");
    let x = AuxWords::new(lab, n)?;
    let next = AuxWords::new(lab, n + 1)?;
    let w = |k: usize| lab.w(k);
    let mut results = Vec::new();
    let mut push = |name, ok: Option<bool>| {
        let outcome = match ok {
            Some(true) => Outcome::Pass,
            Some(false) => Outcome::Fail,
            None => Outcome::Skipped,
        };
        results.push(IdentityResult { name, n, outcome });
    };

    let v_prev = v_word(lab, n - 1)?;
    push("W[n+1]=U[n]V[n]", Some(w(n + 1)? == &Word::concat(&[&x.u, &x.v])[..]));
    push("W[n+2]=U[n]V[n]^3V[n-1]V[n]", Some(w(n + 2)? == &Word::concat(&[&x.u, &x.v, &x.v, &x.v, &v_prev, &x.v])[..]));
    let u_rec = if n >= 2 {
        let (u1, v1) = (u_word(lab, n - 1)?, v_word(lab, n - 1)?);
        Some(x.u == Word::concat(&[&u1, &v1, &v1]))
    } else {
        None
    };
    push("U[n]=U[n-1]V[n-1]^2", u_rec);
    push("U[n]=G[n]F[n]", Some(x.u == Word::concat(&[&x.g, &x.f])));
    push("V[n]=H[n]F[n]", Some(x.v == Word::concat(&[&x.h, &x.f])));
    push("G[n]*H[n]", Some(bullet_last(&x.g, &x.h)?));
    push("H[n+1]=2G[n]", Some(next.h == Word::concat(&[TWO, &x.g])));
    push("G[n+1]=U[n]H[n]", Some(next.g == Word::concat(&[&x.u, &x.h])));
    push("V[n-1]V[n]=2J[n]I[n]", Some(Word::concat(&[&v_prev, &x.v]) == Word::concat(&[TWO, &x.j, &x.i])));
    push("V[n]=2J[n]I[n-1]", Some(x.v == Word::concat(&[TWO, &x.j, &x.i_prev])));
    push("I[n]**I[n-1]", Some(bullet_first(&x.i, &x.i_prev)?));

    let tail = Word::concat(&[w(n - 1)?, TWO, w(n)?, TWO, w(n + 2)?]);
    push("W[n+3]=U'[n]^2W[n-1]2W[n]2W[n+2]", Some(w(n + 3)? == &Word::concat(&[&x.u_prime, &x.u_prime, &tail])[..]));
    let a = strip(&tail, &x.j).map(Word::from);
    let b = strip(&x.u_prime, &x.j).map(Word::from);
    let ab = match (&a, &b) {
        (Some(a), Some(b)) => bullet_first(a, b)?,
        _ => false,
    };
    push("A[n]**B[n]", Some(ab));

    Ok(IdentityReport { n, results, a, b })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_index_skips_recursion() {
        let lab = WordLab::new(4);
        let r = word_identities(&lab, 1).unwrap();
        assert!(r.all_pass());
        let skipped: Vec<_> = r.results.iter().filter(|x| x.outcome == Outcome::Skipped).collect();
        assert_eq!(skipped.len(), 1);
        assert_eq!(skipped[0].name, "U[n]=U[n-1]V[n-1]^2");
    }

    #[test]
    fn all_pass_up_to_ten() {
        let lab = WordLab::new(13);
        for n in 2..=10 {
            let r = word_identities(&lab, n).unwrap();
            assert!(r.results.iter().all(|x| x.outcome == Outcome::Pass), "n = {n}: {:?}", r.results);
            assert!(r.a.is_some() && r.b.is_some());
        }
    }

    #[test]
    fn short_ladder_is_an_error() {
        let lab = WordLab::new(4);
        assert!(word_identities(&lab, 2).is_err());
    }
}
