//! Exact arithmetic for continued fractions in `K((1/T))`.
//!
//! The crate is split into four layers:
//!
//! * [`arith`]: coefficient fields (`Q` and `F_p`), dense univariate
//!   polynomials, rational functions and truncated Laurent series in `1/T`
//!   with explicit precision bookkeeping.
//! * [`words`]: the two-letter word `W` defined by
//!   `W_n = W_{n-1} 2 W_{n-2} 2 W_{n-1}`, its auxiliary factorisations and the
//!   maps sending words to polynomials and generating functions.
//! * [`cf`]: continued-fraction expansion of rational functions and of
//!   truncated series (with a certified-prefix stopping rule), convergent
//!   tables and the irrationality-measure estimator.
//! * [`verify`]: executable checks of the approximation, coprimality,
//!   degree and measure results for `theta = sum w(n) T^-n`, the
//!   partial-quotient conjecture, the Mills-Robbins quartic over `F_3` and
//!   the alternative-alphabet variant.
//!
//! Everything is `no_std` + `alloc`; IO, JSON and the CLI live in the
//! companion `thetacf` crate.

#![cfg_attr(not(test), no_std)]
// degree formulas are kept in their `(x + 1) / 2` form
#![allow(clippy::manual_div_ceil)]

extern crate alloc;

pub mod arith;
pub mod cf;
pub mod error;
pub mod verify;
pub mod words;

pub use arith::{Field, LaurentSeries, Polynomial, PrimeField, PrimeFieldElem, Rational, RationalFunction, Rationals};
pub use cf::{ContinuedFraction, ConvergentTable};
pub use error::{ArithError, ParseError, VerifyError, WordError};
pub use words::{Alphabet, Letter, Word, WordLab};
