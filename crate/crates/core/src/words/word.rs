use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;
use core::str::FromStr;

use crate::arith::{Field, Rationals};
use crate::error::{ParseError, WordError};

/// A letter of the two-letter alphabet; `A` renders as `1` and `B` as `2`
/// under the default alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub fn digit(self) -> char {
        match self {
            Letter::A => '1',
            Letter::B => '2',
        }
    }
}

/// Finite word over `{A, B}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Concatenation of the given pieces.
    pub fn concat(parts: &[&[Letter]]) -> Self {
        let len = parts.iter().map(|p| p.len()).sum();
        let mut v = Vec::with_capacity(len);
        for p in parts {
            v.extend_from_slice(p);
        }
        Self(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Render with an arbitrary alphabet as comma-separated field elements.
    pub fn render_with<F: Field>(&self, alphabet: &Alphabet<F>) -> String
    where
        F::Elem: fmt::Display,
    {
        use core::fmt::Write;
        let mut out = String::new();
        for (i, &l) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{}", alphabet.value(l));
        }
        out
    }
}

impl Deref for Word {
    type Target = [Letter];
    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<&[Letter]> for Word {
    fn from(s: &[Letter]) -> Self {
        Self(s.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_fmt(format_args!("{}", l.digit()))?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseError;

    /// Bare letter string over the default alphabet, e.g. `"1221"`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        s.trim()
            .char_indices()
            .map(|(i, c)| match c {
                '1' => Ok(Letter::A),
                '2' => Ok(Letter::B),
                _ => Err(ParseError::new(i, alloc::format!("unexpected letter `{c}`"))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// Ordered pair `(a, b)` of distinct field elements giving the values of the
/// letters `A` and `B`.
#[derive(Clone, Debug, PartialEq)]
pub struct Alphabet<F: Field> {
    field: F,
    a: F::Elem,
    b: F::Elem,
}

impl<F: Field> Alphabet<F> {
    pub fn new(field: F, a: F::Elem, b: F::Elem) -> Result<Self, WordError> {
        if a == b {
            return Err(WordError::DegenerateAlphabet);
        }
        Ok(Self { field, a, b })
    }

    /// The images of `1` and `2` in `field`. Over `F_2` these coincide.
    pub fn standard(field: F) -> Result<Self, WordError> {
        let (a, b) = (field.from_i64(1), field.from_i64(2));
        Self::new(field, a, b)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn value(&self, l: Letter) -> &F::Elem {
        match l {
            Letter::A => &self.a,
            Letter::B => &self.b,
        }
    }
}

impl Default for Alphabet<Rationals> {
    fn default() -> Self {
        Self::standard(Rationals).expect("1 != 2 in Q")
    }
}

/// `true` iff the last letters of `a` and `b` differ.
pub fn bullet_last(a: &[Letter], b: &[Letter]) -> Result<bool, WordError> {
    match (a.last(), b.last()) {
        (Some(x), Some(y)) => Ok(x != y),
        _ => Err(WordError::EmptyWord),
    }
}

/// `true` iff the first letters of `a` and `b` differ.
pub fn bullet_first(a: &[Letter], b: &[Letter]) -> Result<bool, WordError> {
    match (a.first(), b.first()) {
        (Some(x), Some(y)) => Ok(x != y),
        _ => Err(WordError::EmptyWord),
    }
}

/// 1-based rank of the first position where the streams differ, looking at
/// no more than `horizon` letters of each.
pub fn first_diff_rank<I, J>(a: I, b: J, horizon: usize) -> Result<usize, WordError>
where
    I: IntoIterator<Item = Letter>,
    J: IntoIterator<Item = Letter>,
{
    a.into_iter().zip(b).take(horizon).position(|(x, y)| x != y).map(|i| i + 1).ok_or(WordError::StreamsAgree(horizon))
}
