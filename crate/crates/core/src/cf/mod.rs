//! Continued fractions in `K((1/T))`.

mod convergents;
mod expand;
mod measure;

pub use convergents::ConvergentTable;
pub use expand::{
    approx_order, approx_order_quotient, cf_of_quotient, cf_of_ratfunc, cf_of_series, ContinuedFraction,
    SeriesExpansion,
};
pub use measure::{measure_estimate, MeasureTerm};
