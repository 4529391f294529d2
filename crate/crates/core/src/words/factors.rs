use alloc::vec::Vec;

use crate::error::WordError;
use crate::words::ladder::WordLab;
use crate::words::word::{Letter, Word};

const TWO: &[Letter] = &[Letter::B];

/// The auxiliary words attached to index `n >= 1`.
///
/// `i` is `I_n`, read off `V_{n-1} V_n = 2 J_n I_n`; `i_prev` is `I_{n-1}`
/// read off the same relation one step earlier (`I_0 = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxWords {
    pub n: usize,
    pub u: Word,
    pub v: Word,
    pub f: Word,
    pub g: Word,
    pub h: Word,
    pub j: Word,
    pub i: Word,
    pub i_prev: Word,
    pub u_prime: Word,
}

/// `U_n = W_n 2 W_{n-1}`.
pub fn u_word(lab: &WordLab, n: usize) -> Result<Word, WordError> {
    Ok(Word::concat(&[lab.w(n)?, TWO, lab.w(n - 1)?]))
}

/// `V_n = 2 W_n`.
pub fn v_word(lab: &WordLab, n: usize) -> Result<Word, WordError> {
    Ok(Word::concat(&[TWO, lab.w(n)?]))
}

/// `U'_n = W_{n+1} 2 W_n 2`.
pub fn u_prime_word(lab: &WordLab, n: usize) -> Result<Word, WordError> {
    Ok(Word::concat(&[lab.w(n + 1)?, TWO, lab.w(n)?, TWO]))
}

/// `F_n = 2 W_1 2 W_2 ... 2 W_{n-1}`.
pub fn f_word(lab: &WordLab, n: usize) -> Result<Word, WordError> {
    let mut out = Vec::new();
    for k in 1..n {
        out.push(Letter::B);
        out.extend_from_slice(lab.w(k)?);
    }
    Ok(Word::new(out))
}

/// `J_n = W_{n-1} 2 W_{n-2} 2 ... W_1 2`.
pub fn j_word(lab: &WordLab, n: usize) -> Result<Word, WordError> {
    let mut out = Vec::new();
    for k in (1..n).rev() {
        out.extend_from_slice(lab.w(k)?);
        out.push(Letter::B);
    }
    Ok(Word::new(out))
}

/// `(G_n, H_n)` from `G_1 = U_1`, `H_1 = V_1`, `G_n = U_{n-1} H_{n-1}`,
/// `H_n = 2 G_{n-1}`.
pub fn gh_words(lab: &WordLab, n: usize) -> Result<(Word, Word), WordError> {
    let mut g = u_word(lab, 1)?;
    let mut h = v_word(lab, 1)?;
    for k in 2..=n {
        let next_g = Word::concat(&[&u_word(lab, k - 1)?, &h]);
        h = Word::concat(&[TWO, &g]);
        g = next_g;
    }
    Ok((g, h))
}

/// `I_n` as the suffix of `V_{n-1} V_n` after its first `1 + |J_n|` letters.
fn i_word(lab: &WordLab, n: usize) -> Result<Word, WordError> {
    if n == 0 {
        return Ok(Word::new(alloc::vec![Letter::A]));
    }
    let vv = Word::concat(&[&v_word(lab, n - 1)?, &v_word(lab, n)?]);
    let skip = 1 + j_word(lab, n)?.len();
    Ok(Word::from(&vv[skip.min(vv.len())..]))
}

impl AuxWords {
    /// Needs `lab.top() >= n + 1`.
    pub fn new(lab: &WordLab, n: usize) -> Result<Self, WordError> {
        assert!(n >= 1, "auxiliary words start at n = 1");
        let (g, h) = gh_words(lab, n)?;
        Ok(Self {
            n,
            u: u_word(lab, n)?,
            v: v_word(lab, n)?,
            f: f_word(lab, n)?,
            g,
            h,
            j: j_word(lab, n)?,
            i: i_word(lab, n)?,
            i_prev: i_word(lab, n - 1)?,
            u_prime: u_prime_word(lab, n)?,
        })
    }
}
