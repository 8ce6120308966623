//! Explicit constants of the fourth power moment of zeta on the critical line
//! and the bounds built from them.

mod bounds;
mod params;
mod terms;

pub use bounds::{
    a_constants, corollary2_bounds, crude_coefficient, dyadic_bounds, dyadic_points, residue_bound,
    theorem2_interval, third_moment_coeff, zeta_sixth_envelope, CumulativeBounds, FinalBounds,
    OctaveBounds,
};
pub use params::{
    check_growth_conditions, check_growth_conditions_for_all, MomentParams, ShiftExponents,
};
pub use terms::{
    big_g_constant, chi_envelope, core_constants, eta, g_constant, half_power_coefficient,
    j_constant, moment_constants, BigG, CoreConstants, Envelope, JConstant, MomentConstants,
    SmallG,
};
