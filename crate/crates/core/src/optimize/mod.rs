//! Derivative-free box-constrained search (Nelder–Mead and seeded random
//! multistart) and the tuning problems of the zero-density and moment bounds.

mod problems;
mod rng;
mod search;

pub use problems::{
    c1_params, c1_problem, c1_published, f1_params, f1_problem, f1_published, optimize_table1,
    table1_problem, table1_published, C1_NAMES, F1_NAMES, TABLE1_BOX, TABLE1_NAMES,
};
pub use rng::{mix, SplitMix64};
pub use search::{nelder_mead, random_multistart, OptResult, OptimizationProblem, SearchSettings};
