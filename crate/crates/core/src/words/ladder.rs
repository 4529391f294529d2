use alloc::vec::Vec;

use crate::error::WordError;
use crate::words::lengths::LengthTable;
use crate::words::word::{Letter, Word};

/// Memoized ladder `W_0, W_1, ..., W_top`.
///
/// Every `W_n` is a prefix of `W_{n+1}`, so only `W_top` is stored and the
/// lower words are slices of it. Built once, then read-only.
#[derive(Clone, Debug)]
pub struct WordLab {
    lengths: LengthTable,
    word: Vec<Letter>,
}

impl WordLab {
    pub fn new(top: usize) -> Self {
        let lengths = LengthTable::new(top);
        let mut word = Vec::with_capacity(lengths.ell(top));
        if top >= 1 {
            word.push(Letter::A);
        }
        for n in 2..=top {
            let prev = lengths.ell(n - 1);
            word.push(Letter::B);
            word.extend_from_within(..lengths.ell(n - 2));
            word.push(Letter::B);
            word.extend_from_within(..prev);
        }
        Self { lengths, word }
    }

    /// Smallest ladder whose top word has at least `len` letters.
    pub fn for_prefix(len: usize) -> Self {
        let (mut top, mut prev, mut cur) = (0, 0usize, 0usize);
        while cur < len {
            (prev, cur) = (cur, if top == 0 { 1 } else { 2 * cur + prev + 2 });
            top += 1;
        }
        Self::new(top)
    }

    pub fn top(&self) -> usize {
        self.lengths.max()
    }

    pub fn lengths(&self) -> &LengthTable {
        &self.lengths
    }

    pub fn ell(&self, n: usize) -> usize {
        self.lengths.ell(n)
    }

    pub fn w(&self, n: usize) -> Result<&[Letter], WordError> {
        if n > self.top() {
            return Err(WordError::OutOfRange { requested: n, available: self.top() });
        }
        Ok(&self.word[..self.lengths.ell(n)])
    }

    /// First `len` letters of the infinite word.
    pub fn prefix(&self, len: usize) -> Result<&[Letter], WordError> {
        self.word.get(..len).ok_or(WordError::OutOfRange { requested: len, available: self.word.len() })
    }

    /// Letter `w(k)`, 1-based.
    pub fn letter(&self, k: usize) -> Option<Letter> {
        k.checked_sub(1).and_then(|i| self.word.get(i)).copied()
    }
}

pub fn build_w(n: usize) -> Word {
    Word::from(WordLab::new(n).w(n).expect("within ladder"))
}

pub fn w_prefix(len: usize) -> Word {
    Word::from(WordLab::for_prefix(len).prefix(len).expect("ladder long enough"))
}
