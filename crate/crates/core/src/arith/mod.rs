//! Exact coefficient fields, polynomials, rational functions and truncated
//! Laurent series in `1/T`.

mod field;
mod modular;
mod poly;
mod ratfunc;
mod series;
mod text;

pub use field::{is_prime, Field, PrimeField, PrimeFieldElem, Rational, Rationals};
pub use modular::{coprime_mod_p, reduce_mod_p, COPRIMALITY_PRIME};
pub use poly::Polynomial;
pub use ratfunc::RationalFunction;
pub use series::LaurentSeries;
pub use text::format_list;
