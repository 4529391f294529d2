use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `l_0 .. l_N` with `l_0 = 0`, `l_1 = 1`, `l_{n+1} = 2 l_n + l_{n-1} + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LengthTable {
    values: Vec<u64>,
}

impl LengthTable {
    /// Panics if `l_max` overflows `u64` (around `max = 48`).
    pub fn new(max: usize) -> Self {
        let mut values = Vec::with_capacity(max + 1);
        values.push(0u64);
        if max >= 1 {
            values.push(1);
        }
        while values.len() <= max {
            let k = values.len();
            let next = values[k - 1]
                .checked_mul(2)
                .and_then(|v| v.checked_add(values[k - 2]))
                .and_then(|v| v.checked_add(2))
                .expect("length overflow");
            values.push(next);
        }
        Self { values }
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> u64 {
        self.values[n]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `l_n` as `usize`.
    pub fn ell(&self, n: usize) -> usize {
        self.values[n] as usize
    }
}

/// `x + y*sqrt(2)` with integer parts.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Sqrt2 {
    x: BigInt,
    y: BigInt,
}

impl Sqrt2 {
    fn new(x: i64, y: i64) -> Self {
        Self { x: x.into(), y: y.into() }
    }

    fn mul(&self, o: &Self) -> Self {
        Self { x: &self.x * &o.x + BigInt::from(2) * &self.y * &o.y, y: &self.x * &o.y + &self.y * &o.x }
    }

    fn pow(&self, n: usize) -> Self {
        let mut acc = Self { x: BigInt::one(), y: BigInt::zero() };
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `((2+r)(1+r)^n + (2-r)(1-r)^n)/4 - 1` with `r = sqrt 2`, evaluated exactly;
/// `None` if the irrational parts fail to cancel or the division by 4 is not
/// exact.
pub fn closed_form_length(n: usize) -> Option<BigInt> {
    let plus = Sqrt2::new(2, 1).mul(&Sqrt2::new(1, 1).pow(n));
    let minus = Sqrt2::new(2, -1).mul(&Sqrt2::new(1, -1).pow(n));
    let sum_x = plus.x + minus.x;
    let sum_y = plus.y + minus.y;
    if !sum_y.is_zero() {
        return None;
    }
    let (q, r) = sum_x.div_rem(&BigInt::from(4));
    r.is_zero().then(|| q - 1)
}

/// Closed form against the recurrence value for `l_n`.
pub fn closed_form_check(table: &LengthTable, n: usize) -> bool {
    closed_form_length(n) == Some(BigInt::from(table.get(n)))
}
