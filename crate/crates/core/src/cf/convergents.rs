use alloc::vec::Vec;

use crate::arith::{Field, Polynomial, RationalFunction};
use crate::cf::expand::ContinuedFraction;

/// Rows `(x_n, y_n)`, `n = 0..=m`, from `z_n = a_n z_{n-1} + z_{n-2}` with
/// `(x_{-1}, y_{-1}) = (1, 0)` and `(x_{-2}, y_{-2}) = (0, 1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvergentTable<F: Field> {
    rows: Vec<(Polynomial<F>, Polynomial<F>)>,
}

impl<F: Field> ConvergentTable<F> {
    pub fn new(cf: &ContinuedFraction<F>) -> Self {
        let field = cf.a0().field().clone();
        let mut prev2 = (Polynomial::zero(field.clone()), Polynomial::one(field.clone()));
        let mut prev1 = (Polynomial::one(field.clone()), Polynomial::zero(field));
        let mut rows = Vec::with_capacity(cf.quotients().len());
        for a in cf.quotients() {
            let x = &(a * &prev1.0) + &prev2.0;
            let y = &(a * &prev1.1) + &prev2.1;
            prev2 = core::mem::replace(&mut prev1, (x, y));
            rows.push(prev1.clone());
        }
        Self { rows }
    }

    pub fn rows(&self) -> &[(Polynomial<F>, Polynomial<F>)] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &(Polynomial<F>, Polynomial<F>) {
        &self.rows[n]
    }

    pub fn last(&self) -> &(Polynomial<F>, Polynomial<F>) {
        self.rows.last().expect("a table has at least the a_0 row")
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `x_n / y_n` in canonical form.
    pub fn convergent(&self, n: usize) -> RationalFunction<F> {
        let (x, y) = self.rows[n].clone();
        RationalFunction::from_coprime(x, y).expect("nonzero denominator")
    }

    /// Index of the row whose convergent equals `f`, looked up by the degree
    /// of its denominator.
    pub fn index_of(&self, f: &RationalFunction<F>) -> Option<usize> {
        let d = f.den().degree()?;
        let n = self.rows.iter().position(|(_, y)| y.degree() == Some(d))?;
        (self.convergent(n) == *f).then_some(n)
    }

    /// `x_n y_{n-1} - x_{n-1} y_n = (-1)^{n-1}` for every row `n >= 1`.
    pub fn determinants_alternate(&self) -> bool {
        let field = self.rows[0].0.field().clone();
        let one = Polynomial::one(field);
        self.rows.windows(2).enumerate().all(|(k, w)| {
            let n = k + 1;
            let det = &(&w[1].0 * &w[0].1) - &(&w[0].0 * &w[1].1);
            if n % 2 == 1 {
                det == one
            } else {
                det == -&one
            }
        })
    }
}
