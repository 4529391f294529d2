//! Command-line front end and verification harness for `thetacf-core`.

pub mod cli;
pub mod field;
pub mod render;
pub mod suite;
