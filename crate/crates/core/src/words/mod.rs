//! The word `W`, its auxiliary factorisations and the maps `phi`, `Phi`.

mod factors;
mod identities;
mod ladder;
mod lengths;
mod phi;
mod word;

pub use factors::{f_word, gh_words, j_word, u_prime_word, u_word, v_word, AuxWords};
pub use identities::{word_identities, IdentityReport, IdentityResult, Outcome};
pub use ladder::{build_w, w_prefix, WordLab};
pub use lengths::{closed_form_check, closed_form_length, LengthTable};
pub use phi::{phi, series_of_prefix, Phi};
pub use word::{bullet_first, bullet_last, first_diff_rank, Alphabet, Letter, Word};
