//! Explicit constants for an Ingham-type zero-density estimate of the Riemann
//! zeta function and for its fourth power moment on the critical line.
//!
//! The crate evaluates every constant of the zero-density theorem and of the
//! fourth-moment theorem, checks the divisor-sum and special-function lemmas
//! they rest on against brute-force oracles, and reproduces the parameter
//! optimisations behind the published tables.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod bracket;
pub mod cli;
pub mod constants;
pub mod convexity;
pub mod divisor;
pub mod error;
pub mod moment4;
pub mod numerics;
pub mod optimize;
pub mod report;
pub mod zerodensity;

pub use bracket::Bracket;
pub use constants::{ConstantsTable, CONSTANTS, EULER_GAMMA};
pub use error::{Error, Result};
pub use report::VerificationReport;
