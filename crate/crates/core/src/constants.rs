//! Numerical literals shared by every module.
//!
//! Each literal lives here exactly once; formulas refer to the fields of
//! [`CONSTANTS`] rather than repeating digits.

use serde::Serialize;

/// Euler's constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Literal constants entering the explicit estimates.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConstantsTable {
    /// Mean-value constant `sqrt(1 + (2/3) sqrt(6/5))`.
    pub m0: f64,
    /// Height to which the Riemann hypothesis is verified.
    pub h_rh: f64,
    /// Coefficients in the divisor-sum bounds for the mollifier.
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub b4: f64,
    /// Lower-order coefficients of the squared divisor summatory function,
    /// as `(lower, upper)` enclosures.
    pub d2_coeff: (f64, f64),
    pub d3_coeff: (f64, f64),
    pub d4_coeff: (f64, f64),
    /// Error constant in `|sum d(n)^2 - main| <= c x^{3/4} log x`.
    pub d2_error: f64,
    /// Rounded `2 * d2_coeff.1` as it appears in the weighted `d^2` bounds.
    pub d2_coeff_doubled: f64,
    /// Remainder constant in the `sigma < 0` weighted `d^2` bound.
    pub d2_neg_remainder: f64,
    /// Constant term and inverse-log coefficients of the `sum d(n)^2/n` bound.
    pub d6_terms: [f64; 4],
    /// Inverse-log coefficients and remainder of the `e^{-2n/x}` tail bound.
    pub d7_terms: [f64; 4],
    /// Upper constant in the fourth-moment asymptotic for `T >= 1e5`.
    pub fourth_moment_f1: f64,
    /// Lower constant in the same asymptotic.
    pub fourth_moment_lower: f64,
    /// Additive constant in the asymptotic fourth-moment bound.
    pub fourth_moment_additive: f64,
    /// Coefficient of `T log^{7/2}` in the bound valid from `T = 3000`.
    pub fourth_moment_c1: f64,
    /// Additive constant in the bound valid from `T = 3000`.
    pub fourth_moment_c1_additive: f64,
    /// Published enclosure of the fourth moment on `[0, 3000]`.
    pub moment_0_3000: [f64; 2],
    /// Published enclosure of the fourth moment on `[3000, 6000]`.
    pub moment_3000_6000: [f64; 2],
    /// Additive constant inside `a1(A0)` and `a2(A0)`.
    pub a1_additive: f64,
    pub a2_additive: f64,
    /// Constants of the zero-counting upper bound.
    pub nt_log_coeff: f64,
    /// Numerator in the C6 constant.
    pub c6_base: f64,
    /// Constant in the C5 constant.
    pub c5_log_coeff: f64,
    /// Third-moment coefficients.
    pub third_moment_lin: f64,
    pub third_moment_quad: f64,
    /// Second-moment and fourth-moment factors combined into the third moment.
    pub second_moment_log_coeff: f64,
    pub fourth_moment_log_coeff: f64,
    /// Smallest base height admitted by the fourth-moment theorem.
    pub fourth_moment_min_t0: f64,
    /// Base heights of the two fourth-moment corollaries.
    pub half_power_from: f64,
    pub asymptotic_from: f64,
    /// Envelope constants for `|chi|` off the critical line.
    pub chi_left_scale: f64,
    pub chi_left_shift: f64,
    pub chi_right_scale: f64,
    /// Constant in the `e^{-pi T/2}` residue term.
    pub residue_coeff: f64,
    pub j0_residue_coeff: f64,
    /// Smallest admissible `H0` in the zero-density theorem.
    pub zd_min_h0: f64,
    /// Smallest admissible mollifier length `h T0`.
    pub mollifier_min_x: f64,
    /// Largest `d` admitted when the zero-density theorem is specialised to `T0 = H0 = H = H_RH`.
    pub corollary_max_d: f64,
}

pub const CONSTANTS: ConstantsTable = ConstantsTable {
    m0: 1.315_407_443_851_608_1,
    h_rh: 3.0e12,
    b1: 0.62,
    b2: 1.048,
    b3: 0.605,
    b4: 0.529,
    d2_coeff: (0.744_341, 0.744_342),
    d3_coeff: (0.823_265, 0.823_266),
    d4_coeff: (0.460_323, 0.460_324),
    d2_error: 9.73,
    d2_coeff_doubled: 1.488_684,
    d2_neg_remainder: 17.52,
    d6_terms: [0.349_436, 1.155_975, 1.283_59, 154.0],
    d7_terms: [0.124_41, 0.364, 0.3, 4.61],
    fourth_moment_f1: 48.801,
    fourth_moment_lower: 48.942,
    fourth_moment_additive: 3.0592e10,
    fourth_moment_c1: 20.7225,
    fourth_moment_c1_additive: 1.9532e6,
    moment_0_3000: [7.031e5, 7.032e5],
    moment_3000_6000: [1.249e6, 1.25e6],
    a1_additive: 3.0592e10,
    a2_additive: 2.1817e10,
    nt_log_coeff: 0.43,
    c6_base: 220.0,
    c5_log_coeff: 3.31,
    third_moment_lin: 241.03,
    third_moment_quad: 132.1,
    second_moment_log_coeff: 0.548,
    fourth_moment_log_coeff: 241.0,
    fourth_moment_min_t0: 55.0,
    half_power_from: 3.0e3,
    asymptotic_from: 1.0e5,
    chi_left_scale: 0.4,
    chi_left_shift: 16.0,
    chi_right_scale: 6.31,
    residue_coeff: 12.0,
    j0_residue_coeff: 12.1,
    zd_min_h0: 1002.0,
    mollifier_min_x: 1.0e9,
    corollary_max_d: 0.89,
};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m0_matches_closed_form() {
        let m0 = (1.0 + (2.0 / 3.0) * (6.0f64 / 5.0).sqrt()).sqrt();
        assert!((CONSTANTS.m0 - m0).abs() < 1e-15);
        assert!((CONSTANTS.m0 - 1.315_406_8).abs() < 1e-6);
    }

    #[test]
    fn enclosures_are_ordered() {
        for (lo, hi) in [CONSTANTS.d2_coeff, CONSTANTS.d3_coeff, CONSTANTS.d4_coeff] {
            assert!(lo < hi);
        }
    }
}
