use crate::arith::{Field, LaurentSeries, Polynomial, Rationals};
use crate::error::WordError;
use crate::words::{gh_words, phi, series_of_prefix, u_prime_word, Alphabet, WordLab};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproximantKind {
    /// `R_n / S_n` from `U_n V_n^inf`
    Lemma1,
    /// `R'_n / S'_n` from `(U'_n)^inf`
    Lemma2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ApproximantPair<F: Field> {
    pub n: usize,
    pub r: Polynomial<F>,
    pub s: Polynomial<F>,
    pub kind: ApproximantKind,
}

/// `T^a - T^b` with `a > b`.
fn binomial<F: Field>(field: &F, a: usize, b: usize) -> Polynomial<F> {
    let mut c = alloc::vec![field.zero(); a + 1];
    c[a] = field.one();
    c[b] = field.neg(&field.one());
    Polynomial::new(field.clone(), c)
}

/// `R_n = phi(G_{n+1}) - phi(G_n)`, `S_n = T^{|G_n|} (T^{l_n + 1} - 1)`.
/// Needs `lab.top() >= n`.
pub fn make_lemma1_pair<F: Field>(
    lab: &WordLab,
    alphabet: &Alphabet<F>,
    n: usize,
) -> Result<ApproximantPair<F>, WordError> {
    assert!(n >= 1, "approximants start at n = 1");
    let (g, _) = gh_words(lab, n)?;
    let (g_next, _) = gh_words(lab, n + 1)?;
    let r = &phi(&g_next, alphabet) - &phi(&g, alphabet);
    let s = binomial(alphabet.field(), g.len() + lab.ell(n) + 1, g.len());
    Ok(ApproximantPair { n, r, s, kind: ApproximantKind::Lemma1 })
}

/// `R'_n = phi(U'_n)`, `S'_n = T^{|U'_n|} - 1`. Needs `lab.top() >= n + 1`.
pub fn make_lemma2_pair<F: Field>(
    lab: &WordLab,
    alphabet: &Alphabet<F>,
    n: usize,
) -> Result<ApproximantPair<F>, WordError> {
    assert!(n >= 1, "approximants start at n = 1");
    let u = u_prime_word(lab, n)?;
    let r = phi(&u, alphabet);
    let s = binomial(alphabet.field(), u.len(), 0);
    Ok(ApproximantPair { n, r, s, kind: ApproximantKind::Lemma2 })
}

/// Shared read-only inputs of the checks over `Q` with the alphabet `(1, 2)`.
#[derive(Clone, Debug)]
pub struct Context {
    lab: WordLab,
    alphabet: Alphabet<Rationals>,
    corrupt_r1: bool,
}

impl Context {
    /// Ladder up to `W_top`; checks at index `n` need roughly `top >= n + 3`.
    pub fn new(top: usize) -> Self {
        Self { lab: WordLab::new(top), alphabet: Alphabet::default(), corrupt_r1: false }
    }

    /// Context for checks up to index `max_n`.
    pub fn for_max_n(max_n: usize) -> Self {
        Self::new(max_n + 4)
    }

    /// Replace `R_1` by `R_1 + 1`; used to exercise the failure paths.
    pub fn with_corrupted_r1(mut self) -> Self {
        self.corrupt_r1 = true;
        self
    }

    pub fn lab(&self) -> &WordLab {
        &self.lab
    }

    pub fn alphabet(&self) -> &Alphabet<Rationals> {
        &self.alphabet
    }

    pub fn lemma1_pair(&self, n: usize) -> Result<ApproximantPair<Rationals>, WordError> {
        let mut pair = make_lemma1_pair(&self.lab, &self.alphabet, n)?;
        if self.corrupt_r1 && n == 1 {
            pair.r = &pair.r + &Polynomial::one(Rationals);
        }
        Ok(pair)
    }

    pub fn lemma2_pair(&self, n: usize) -> Result<ApproximantPair<Rationals>, WordError> {
        make_lemma2_pair(&self.lab, &self.alphabet, n)
    }

    /// `theta` known down to `T^-prec`.
    pub fn theta(&self, prec: usize) -> Result<LaurentSeries<Rationals>, WordError> {
        Ok(series_of_prefix(self.lab.prefix(prec)?, &self.alphabet))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> Polynomial<Rationals> {
        Polynomial::from_i64s(Rationals, c)
    }

    #[test]
    fn first_pairs() {
        let ctx = Context::new(6);
        let p = ctx.lemma1_pair(1).unwrap();
        assert_eq!(p.r, q(&[-1, 1, 2, 1]));
        assert_eq!(p.s, q(&[0, 0, -1, 0, 1]));
        let p = ctx.lemma2_pair(1).unwrap();
        assert_eq!(p.r, q(&[2, 1, 2, 1, 2, 2, 1]));
        assert_eq!(p.s, q(&[-1, 0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(p.r.degree(), Some(6));
    }

    #[test]
    fn second_pair_is_coprime() {
        let ctx = Context::new(6);
        let p = ctx.lemma1_pair(2).unwrap();
        assert!(p.r.gcd(&p.s).unwrap().is_one());
        assert_eq!(p.s.degree(), Some(9));
    }

    #[test]
    fn fault_only_touches_r1() {
        let ctx = Context::new(6).with_corrupted_r1();
        assert_eq!(ctx.lemma1_pair(1).unwrap().r, q(&[0, 1, 2, 1]));
        assert_eq!(ctx.lemma1_pair(2).unwrap(), Context::new(6).lemma1_pair(2).unwrap());
    }
}
