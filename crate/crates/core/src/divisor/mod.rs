//! Divisor-function sieve, weighted divisor sums and their explicit bounds.

mod bounds;
mod lemmas;
mod mean_value;
mod sums;
mod table;

pub use bounds::{d1, d2, d2_summatory, d3, d4, d5, d6, d7, divisor_constant, DivisorConstant};
pub use lemmas::{lemma_grid, verify_divisor_lemma, verify_divisor_suite, DivisorLemma};
pub use mean_value::{mean_square_numeric, mean_value_bracket};
pub use sums::{partial_sums_at, weighted_divisor_sum, Side, Weight, DEFAULT_CUTOFF_FACTOR};
pub use table::{cache_path_from_env, divisor_sieve, DivisorTable, CACHE_ENV, SIEVE_CEILING};
