//! Executable checks with structured pass/fail reports.

mod lemmas;
mod pairs;
mod quartic;
mod remark;
mod report;
mod theorem;

pub use lemmas::{check_lemma1, check_lemma2, check_lemma3, EXACT_GCD_LIMIT, MODULAR_GCD_LIMIT};
pub use pairs::{make_lemma1_pair, make_lemma2_pair, ApproximantKind, ApproximantPair, Context};
pub use quartic::{
    exponent_list, quartic_expansion, quartic_fixed_point_step, quartic_lambda_check, quartic_residual, quartic_root,
    QuarticExpansion, QuarticRoot,
};
pub use remark::{alphabet_variant, check_remark, AlphabetVariant};
pub use report::{poly_digest, sort_reports, tally, CheckReport};
pub use theorem::{
    check_conjecture, check_corollary, check_theorem3, conjecture_r, conjecture_row, conjecture_shapes,
    predicted_degree, ConjectureRow, ThetaExpansion,
};
