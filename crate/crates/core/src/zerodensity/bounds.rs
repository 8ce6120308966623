//! Zero-density bounds assembled from the constants.

use super::params::ZdParams;
use super::terms::ZdConstants;
use crate::constants::CONSTANTS;
use crate::error::{domain, Result};
use crate::report::VerificationReport;
use serde::Serialize;
use std::f64::consts::{E, PI};

/// Exponent `3(1 - sigma)/(2 - sigma)` of `T` in the density bound.
pub fn density_exponent(sigma: f64) -> f64 {
    3.0 * (1.0 - sigma) / (2.0 - sigma)
}

fn require_heights(t: f64, p: &ZdParams) -> Result<()> {
    if !(t >= p.t0 && t >= p.big_h && t.is_finite()) {
        return domain(format!(
            "need T >= max(T0, H) = {}, got {t}",
            p.t0.max(p.big_h)
        ));
    }
    Ok(())
}

/// Bound on `F_X(sigma, H, T, (3/4) w1 + (1/2) w2)` with `X = hT`, for `1/2 <= sigma <= 1`.
pub fn fx_bound(sigma: f64, t: f64, p: &ZdParams, z: &ZdConstants) -> Result<f64> {
    p.validate()?;
    if !(0.5..=1.0).contains(&sigma) {
        return domain(format!("sigma must lie in [1/2, 1], got {sigma}"));
    }
    require_heights(t, p)?;
    let q = 2.0 - sigma;
    let e = density_exponent(sigma);
    let (lt, lht) = (t.ln(), (p.h * t).ln());
    let prefix = 2.0 / q * z.l0.ln() + (2.0 * sigma - 1.0) / q * z.k3.ln();
    let first = z.l1.ln()
        + e * (z.k1 * t).ln()
        + 4.0 * (1.0 - sigma) / q * lt.ln()
        + 2.0 * sigma / q * lht.ln();
    let second = z.l2.ln() + e * (z.k2 * t).ln() + 2.0 * (2.0 * sigma - 1.0) / q * lht.ln();
    Ok((prefix + first).exp() + (prefix + second).exp())
}

/// Upper bound for `N(sigma, T) - N(sigma, H)` for
/// `1/2 + d/log T < sigma1 <= sigma <= sigma2` and `T >= max(T0, H)`.
pub fn theorem1_bound(sigma: f64, t: f64, p: &ZdParams, z: &ZdConstants) -> Result<f64> {
    p.validate()?;
    require_heights(t, p)?;
    let lt = t.ln();
    if !(sigma >= p.sigma1 && sigma <= p.sigma2) {
        return domain(format!(
            "sigma = {sigma} outside [{}, {}]",
            p.sigma1, p.sigma2
        ));
    }
    if !(p.sigma1 > 0.5 + p.d / lt) {
        return domain(format!(
            "need sigma1 > 1/2 + d/log T = {}, got {}",
            0.5 + p.d / lt,
            p.sigma1
        ));
    }
    let q = 2.0 - sigma;
    let e = density_exponent(sigma);
    let lht = (p.h * t).ln();
    let scale = 2.0 * PI * p.d;
    let first = z.a1 / scale
        * (e * lt + 2.0 * sigma / q * lht.ln() + (6.0 - 5.0 * sigma) / q * lt.ln()).exp();
    let second = z.a2 / scale * (e * lt + 2.0 * (2.0 * sigma - 1.0) / q * lht.ln()).exp() * lt;
    let low = (z.a3 * (p.big_h * t).ln() + z.a4 * lht + z.a5) * lt;
    Ok(first + second + low)
}

/// Coefficients `B1, B2, B3` of `N(sigma, T) <= B1 T^{3(1-sigma)/(2-sigma)} log^3 T + B2 log^2 T + B3 log T`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DensityCoefficients {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl DensityCoefficients {
    pub fn as_array(&self) -> [f64; 3] {
        [self.b1, self.b2, self.b3]
    }
}

/// Coefficients for the specialisation `T0 = H0 = H = H_RH`, `h = 1`, `d <= 0.89`.
pub fn corollary1_coeffs(p: &ZdParams, z: &ZdConstants) -> Result<DensityCoefficients> {
    p.validate_pinned()?;
    let s2 = p.sigma2;
    let lh = CONSTANTS.h_rh.ln();
    Ok(DensityCoefficients {
        b1: (z.a1 + z.a2 * lh.powf(-6.0 * (1.0 - s2) / (2.0 - s2))) / (2.0 * PI * p.d),
        b2: z.a3 + z.a4,
        b3: z.a3 * lh + z.a5,
    })
}

/// `B1 T^{3(1-sigma)/(2-sigma)} log^3 T + B2 log^2 T + B3 log T` for `T >= H_RH`.
pub fn corollary1_bound(sigma: f64, t: f64, b: &DensityCoefficients) -> Result<f64> {
    if !(0.5..=1.0).contains(&sigma) {
        return domain(format!("sigma must lie in [1/2, 1], got {sigma}"));
    }
    require_rh_height(t)?;
    let l = t.ln();
    Ok(b.b1 * (density_exponent(sigma) * l + 3.0 * l.ln()).exp() + b.b2 * l * l + b.b3 * l)
}

fn require_rh_height(t: f64) -> Result<()> {
    if !(t >= CONSTANTS.h_rh && t.is_finite()) {
        return domain(format!("need T >= {:e}, got {t}", CONSTANTS.h_rh));
    }
    Ok(())
}

/// `(T/2pi) log(T/(2 pi e)) + 0.43 log T` for `T >= H_RH`.
pub fn nt_upper(t: f64) -> Result<f64> {
    require_rh_height(t)?;
    Ok(t / (2.0 * PI) * (t / (2.0 * PI * E)).ln() + CONSTANTS.nt_log_coeff * t.ln())
}

/// Bound covering `1/2 <= sigma <= 1/2 + d/log T`, where the zero-density
/// theorem does not apply: `N(T)` against
/// `B1 exp(-2d/(3/2 - d/log H_RH)) T log^3 T + B2 log^2 T + B3 log T`.
pub fn near_line_check(t: f64, d: f64, b: &DensityCoefficients) -> Result<VerificationReport> {
    require_rh_height(t)?;
    if !(d > 0.0 && d <= CONSTANTS.corollary_max_d) {
        return domain(format!("need 0 < d <= 0.89, got {d}"));
    }
    let l = t.ln();
    let damp = (-2.0 * d / (1.5 - d / CONSTANTS.h_rh.ln())).exp();
    let rhs = b.b1 * damp * t * l.powi(3) + b.b2 * l * l + b.b3 * l;
    let inputs = [("T", t), ("d", d), ("B1", b.b1), ("B2", b.b2), ("B3", b.b3)];
    Ok(VerificationReport::upper(
        "near_critical_line",
        &inputs,
        nt_upper(t)?,
        rhs,
    ))
}
