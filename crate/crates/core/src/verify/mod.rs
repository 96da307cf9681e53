//! Independent checks of reduction output: a rank-based pairing oracle, the
//! output-sensitive bitflip bounds of retrospective reduction, trace lemma
//! checks, a brute-force sparsest-column solver and log-log slope fits.

mod bounds;
mod lemmas;
mod oracle;
mod scaling;
mod sparsest;

pub use bounds::{bound_interval, bound_interval_sized, bound_main, bound_main_sized, BoundCheck};
pub use lemmas::{check_trace_lemmas, Lemma, LemmaReport, LemmaViolation};
pub use oracle::{rank_oracle_pairs, ORACLE_LIMIT};
pub use scaling::{fit_loglog_slope, scaling_exponent, scaling_series};
pub use sparsest::{sparsest_combination_bruteforce, SPARSEST_LIMIT};
