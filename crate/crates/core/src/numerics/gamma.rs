//! `|Γ|` and `|χ|` off the real axis, evaluated in scaled logarithmic form so
//! that the `e^{-π|y|/2}` factors cancel analytically.

use super::quadrature::{integrate_with_breaks, QuadratureConfig};
use crate::bracket::Bracket;
use crate::error::{Error, Result};
use std::f64::consts::{LN_2, PI};

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Relative accuracy attached to the special-function values.
const REL_ACCURACY: f64 = 1e-13;

/// `B_{2k} / (2k (2k-1))` for `k = 1..=10`.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Magnitude below which Stirling's series is not used directly.
const STIRLING_RADIUS: f64 = 15.0;

fn is_pole(x: f64, y: f64) -> bool {
    y == 0.0 && x <= 0.0 && x == x.round()
}

/// `Re Σ B_{2k}/(2k(2k-1) z^{2k-1})` for `|z| ≥ STIRLING_RADIUS`.
fn stirling_tail(x: f64, y: f64) -> f64 {
    let z = num_complex::Complex64::new(x, y);
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut p = inv;
    let mut acc = num_complex::Complex64::new(0.0, 0.0);
    for c in STIRLING {
        acc += p * c;
        p *= inv2;
    }
    acc.re
}

/// `ln|Γ(x+iy)| + π|y|/2` for `x ≥ 1/2`.
fn ln_gamma_scaled_right(x: f64, y: f64) -> f64 {
    let y = y.abs();
    let mut x = x;
    let mut shift = 0.0;
    // Recurrence Γ(z) = Γ(z+1)/z until Stirling's series is accurate.
    while x.hypot(y) < STIRLING_RADIUS {
        shift += 0.5 * (x * x + y * y).ln();
        x += 1.0;
    }
    let r = x.hypot(y);
    // Re[(z-1/2) log z] + π y/2 = (x-1/2) ln|z| + y·atan(x/y) when y > 0.
    let phase = if y > 0.0 { y * (x / y).atan() } else { 0.0 };
    (x - 0.5) * r.ln() + phase - x + HALF_LN_2PI + stirling_tail(x, y) - shift
}

/// `ln|sin(a + ib)| - |b|`.
fn ln_sin_scaled(a: f64, b: f64) -> f64 {
    let b = b.abs();
    if b < 5.0 {
        let s = a.sin();
        let sh = b.sinh();
        0.5 * (s * s + sh * sh).ln() - b
    } else {
        let q = (-2.0 * b).exp();
        -LN_2 + 0.5 * (q * q - 2.0 * (2.0 * a).cos() * q).ln_1p()
    }
}

/// `ln|cos(a + ib)| - |b|`.
fn ln_cos_scaled(a: f64, b: f64) -> f64 {
    let b = b.abs();
    if b < 5.0 {
        let c = a.cos();
        let sh = b.sinh();
        0.5 * (c * c + sh * sh).ln() - b
    } else {
        let q = (-2.0 * b).exp();
        -LN_2 + 0.5 * (q * q + 2.0 * (2.0 * a).cos() * q).ln_1p()
    }
}

/// `ln|Γ(x+iy)| + π|y|/2`.
pub fn ln_abs_gamma_scaled(x: f64, y: f64) -> Result<f64> {
    if is_pole(x, y) {
        return Err(Error::PoleInput { re: x, im: y });
    }
    if !(x.is_finite() && y.is_finite()) {
        return Err(Error::NonFinite { at: x });
    }
    if x >= 0.5 {
        return Ok(ln_gamma_scaled_right(x, y));
    }
    // Reflection: |Γ(z)| = π / (|sin πz| |Γ(1-z)|).
    Ok(PI.ln() - ln_sin_scaled(PI * x, PI * y) - ln_gamma_scaled_right(1.0 - x, -y))
}

/// `ln|Γ(x+iy)|`.
pub fn ln_abs_gamma(x: f64, y: f64) -> Result<f64> {
    Ok(ln_abs_gamma_scaled(x, y)? - 0.5 * PI * y.abs())
}

/// `|Γ(x+iy)|` with a relative error estimate.
pub fn abs_gamma(x: f64, y: f64) -> Result<Bracket> {
    let v = ln_abs_gamma(x, y)?.exp();
    Ok(Bracket::new(v, REL_ACCURACY * v.max(f64::MIN_POSITIVE)))
}

/// `ln|χ(x+it)|` where `χ(s) = (2π)^s / (2 Γ(s) cos(πs/2))`.
pub fn ln_abs_chi(x: f64, t: f64) -> Result<f64> {
    if x >= 0.5 {
        if t == 0.0 && x == x.round() && (x as i64) % 2 == 1 {
            return Err(Error::PoleInput { re: x, im: t });
        }
        let lg = ln_abs_gamma_scaled(x, t)?;
        let lc = ln_cos_scaled(0.5 * PI * x, 0.5 * PI * t);
        Ok(x * (2.0 * PI).ln() - LN_2 - lg - lc)
    } else {
        // χ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s).
        let ls = ln_sin_scaled(0.5 * PI * x, 0.5 * PI * t);
        let lg = ln_abs_gamma_scaled(1.0 - x, -t)?;
        Ok(x * LN_2 + (x - 1.0) * PI.ln() + ls + lg)
    }
}

/// `|χ(x+it)|`.
pub fn abs_chi(x: f64, t: f64) -> Result<Bracket> {
    let l = ln_abs_chi(x, t)?;
    let v = l.exp();
    // Absolute error in the logarithm grows with the size of the cancelled terms.
    let rel = REL_ACCURACY + 4.0 * f64::EPSILON * (1.0 + t.abs() + x.abs() * (1.0 + t.abs()).ln());
    Ok(Bracket::new(v, rel * v))
}

/// `∫_{-∞}^{∞} |Γ(c+iu)| du`, computed as `2 ∫_0^{U} |Γ(c+iu)| du` plus a
/// Stirling-envelope bound on `∫_U^∞`.
pub fn gamma_abs_moment(c: f64, cfg: &QuadratureConfig) -> Result<Bracket> {
    if is_pole(c, 0.0) {
        return Err(Error::PoleInput { re: c, im: 0.0 });
    }
    let upper = 60.0;
    let mut breaks = vec![0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0];
    if c.abs() < 0.25 && c != 0.0 {
        breaks.extend([0.25 * c.abs(), 0.5 * c.abs(), c.abs(), 2.0 * c.abs()]);
    }
    let f = |u: f64| ln_abs_gamma(c, u).map(f64::exp).unwrap_or(f64::NAN);
    let body = integrate_with_breaks(f, 0.0, upper, &breaks, cfg)?;
    // |Γ(c+iu)| ≤ √(2π) e^{1/(2u²)} |z|^{c-1/2} e^{-πu/2} for u ≥ 2.
    let r = (c * c + upper * upper).sqrt();
    let tail = (2.0 * PI).sqrt()
        * (1.0 / (2.0 * upper * upper)).exp()
        * r.powf(c - 0.5).max(upper.powf(c - 0.5))
        * (-0.5 * PI * upper).exp()
        * 2.0
        / PI;
    Ok(Bracket::new(2.0 * body.value, 2.0 * (body.abs_err + tail)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_axis_values() {
        assert!((abs_gamma(0.5, 0.0).unwrap().value - PI.sqrt()).abs() < 1e-13);
        assert!((abs_gamma(1.0, 0.0).unwrap().value - 1.0).abs() < 1e-13);
        assert!((abs_gamma(5.0, 0.0).unwrap().value - 24.0).abs() < 1e-11);
        assert!((abs_gamma(-0.5, 0.0).unwrap().value - 2.0 * PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn poles_are_rejected() {
        assert!(matches!(abs_gamma(0.0, 0.0), Err(Error::PoleInput { .. })));
        assert!(matches!(abs_gamma(-2.0, 0.0), Err(Error::PoleInput { .. })));
        assert!(abs_gamma(-2.0, 1e-3).is_ok());
    }

    #[test]
    fn unit_line_closed_form() {
        // |Γ(1+iu)|² = πu / sinh(πu)
        for u in [0.1, 1.0, 3.7, 12.0, 40.0] {
            let exact = (PI * u / (PI * u).sinh()).sqrt();
            let g = abs_gamma(1.0, u).unwrap().value;
            assert!((g / exact - 1.0).abs() < 1e-12, "u={u}");
        }
        // |Γ(1/2+iu)|² = π / cosh(πu)
        for u in [0.3, 2.0, 9.99, 10.01, 55.0] {
            let exact = (PI / (PI * u).cosh()).sqrt();
            let g = abs_gamma(0.5, u).unwrap().value;
            assert!((g / exact - 1.0).abs() < 1e-12, "u={u}");
        }
    }

    #[test]
    fn reflection_branch_agrees_with_recurrence() {
        // |Γ(z)| = |Γ(z+1)| / |z|
        for (x, y) in [(-0.9, 5.0), (-0.3, 0.2), (0.2, 30.0), (-0.75, 11.0)] {
            let lhs = abs_gamma(x, y).unwrap().value;
            let rhs = abs_gamma(x + 1.0, y).unwrap().value / (x * x + y * y).sqrt();
            assert!((lhs / rhs - 1.0).abs() < 1e-12, "({x},{y})");
        }
    }

    #[test]
    fn chi_has_unit_modulus_on_critical_line() {
        for t in [2.0, 10.0, 100.0, -100.0, 1e3, 1e6] {
            let c = abs_chi(0.5, t).unwrap().value;
            assert!((c - 1.0).abs() < 1e-10, "t={t}: {c}");
        }
    }

    #[test]
    fn chi_reflection_identity() {
        // χ(s) χ(1-s) = 1
        for (x, t) in [(-0.25, 50.0), (0.8, 7.0), (0.1, 3.0), (1.7, 0.5)] {
            let p = abs_chi(x, t).unwrap().value * abs_chi(1.0 - x, -t).unwrap().value;
            assert!((p - 1.0).abs() < 1e-11, "({x},{t})");
        }
    }

    #[test]
    fn chi_pole() {
        assert!(matches!(abs_chi(1.0, 0.0), Err(Error::PoleInput { .. })));
    }

    #[test]
    fn gamma_moment_on_unit_line() {
        let cfg = QuadratureConfig::default();
        let m = gamma_abs_moment(1.0, &cfg).unwrap();
        let oracle = 2.0
            * super::super::quadrature::fixed_gauss(
                |u| {
                    if u == 0.0 {
                        1.0
                    } else {
                        (PI * u / (PI * u).sinh()).sqrt()
                    }
                },
                0.0,
                80.0,
                800,
            );
        assert!(
            (m.value - oracle).abs() < 1e-8 * oracle,
            "{} vs {}",
            m.value,
            oracle
        );
    }
}
