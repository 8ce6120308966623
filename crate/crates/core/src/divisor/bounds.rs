//! Closed-form constants of the weighted divisor-sum bounds and the
//! asymptotic for `sum_{n <= x} d(n)^2`.

use crate::bracket::Bracket;
use crate::constants::{CONSTANTS, EULER_GAMMA};
use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::{E, PI};

/// Which divisor-bound constant to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisorConstant {
    D1,
    D2,
    D3,
    D4,
    D5,
    D6,
    D7,
}

/// Distance from 1 below which `sigma > 1` is treated as violated.
const ONE_GUARD: f64 = 1e-9;

fn check_x0(x0: f64, min: f64) -> Result<f64> {
    if !(x0 >= min) || !x0.is_finite() {
        return domain(format!("x0 must be finite and at least {min}, got {x0}"));
    }
    Ok(x0.ln())
}

/// Bound constant for `sum_{n <= x} d(n) n^{-sigma}`; needs `sigma0 <= 0`.
pub fn d1(x0: f64, s0: f64) -> Result<f64> {
    let l = check_x0(x0, 2.0)?;
    if !(s0 <= 0.0) {
        return domain(format!("D1 needs sigma0 <= 0, got {s0}"));
    }
    let g = EULER_GAMMA;
    let r = x0.sqrt();
    Ok(1.0
        + (2.0 * g - 1.0 - s0 / (1.0 - s0)) / l
        + (1.0 - s0) * (0.5 + s0.abs() - s0) / r
        + (1.0 - 2.0 * g * s0) / (r * l))
}

/// Bound constant for `sum_{n > x} d(n) n^{-sigma}`; needs `sigma0 > 1`.
pub fn d2(x0: f64, s0: f64) -> Result<f64> {
    let l = check_x0(x0, 2.0)?;
    if !(s0 > 1.0 + ONE_GUARD) {
        return domain(format!("D2 needs sigma0 > 1, got {s0}"));
    }
    let g = EULER_GAMMA;
    Ok(s0 - 1.0
        + (1.0 + 2.0 * g * (s0 - 1.0)) / l
        + (4.0 * s0 - 1.0) / ((2.0 * s0 - 1.0) * x0.sqrt() * l))
}

/// Bound constant for `sum_{n > x} d(n) n^{-sigma} e^{-n/x}`.
pub fn d3(x0: f64) -> Result<f64> {
    let l = check_x0(x0, 2.0)?;
    Ok(1.0 / E + (1.0 + 2.0 * EULER_GAMMA) / (E * l) + 5.0 / (2.0 * E * x0.sqrt() * l))
}

/// Bound constant for `sum_{n <= x} d(n)^2 n^{-sigma}`; needs `-3 <= sigma < 1`.
pub fn d4(x0: f64, s: f64) -> Result<f64> {
    let l = check_x0(x0, 2.0)?;
    if !(-3.0..1.0).contains(&s) {
        return domain(format!("D4 needs -3 <= sigma < 1, got {s}"));
    }
    let c = &CONSTANTS;
    let (k2, k3, k4) = (c.d2_coeff.1, c.d3_coeff.1, c.d4_coeff.1);
    let dd = c.d2_coeff_doubled;
    let pi2 = PI * PI;
    let q = 1.0 - s;
    if s < 0.0 {
        Ok(1.0 / (q * pi2)
            + (-3.0 * s / (q * q * pi2) + k2 / q) / l
            + (6.0 * s / (q.powi(3) * pi2) - dd * s / (q * q) + k3 / q) / (l * l)
            + (-6.0 * s / (q.powi(4) * pi2) + dd * s / q.powi(3) - k3 * s / (q * q) + k4 / q)
                / l.powi(3)
            + c.d2_neg_remainder / (x0.powf(0.25) * l * l))
    } else {
        let d42 = 1.0 / pi2
            + k2 / l
            + k3 / (l * l)
            + k4 / l.powi(3)
            + c.d2_error * s * q / (x0.powf(0.25f64.min(q)) * l)
            + c.d2_error * q / (x0.powf(0.25) * l * l);
        Ok(d42 / q)
    }
}

/// Bound constant for `sum_{n > x} d(n)^2 n^{-sigma}`; needs `sigma > 1`.
pub fn d5(x0: f64, s: f64) -> Result<f64> {
    let l = check_x0(x0, 2.0)?;
    if !(s > 1.0 + ONE_GUARD) {
        return domain(format!("D5 needs sigma > 1, got {s}"));
    }
    let c = &CONSTANTS;
    let (k2, k3, k4) = (c.d2_coeff.1, c.d3_coeff.1, c.d4_coeff.1);
    let dd = c.d2_coeff_doubled;
    let pi2 = PI * PI;
    let p = s - 1.0;
    let h = s - 0.75;
    Ok(p.powi(3) / pi2
        + p * p * (3.0 * s / pi2 + k2 * p) / l
        + p * (6.0 * s / pi2 + dd * s * p + k3 * p * p) / (l * l)
        + (6.0 * s / pi2 + dd * s * p + k3 * s * p * p + k4 * p.powi(3)) / l.powi(3)
        + (1.0 + s / h * (1.0 + 1.0 / (h * l))) * c.d2_error * p.powi(4) / (x0.powf(0.25) * l * l))
}

/// Bound constant for `|sum_{n <= x} d(n)^2/n - log^4 x/(4 pi^2)|`.
pub fn d6(x0: f64) -> Result<f64> {
    let l = check_x0(x0, 2.0)?;
    let t = CONSTANTS.d6_terms;
    Ok(t[0]
        + t[1] / l
        + t[2] / (l * l)
        + t[3] / l.powi(3)
        + CONSTANTS.d2_error / (x0.powf(0.25) * l * l))
}

/// Bound constant for `sum_{n > x} d(n)^2 n^{-sigma} e^{-2n/x}`; needs `x0 >= e^4`.
pub fn d7(x0: f64) -> Result<f64> {
    let l = check_x0(x0, 4f64.exp())?;
    let t = CONSTANTS.d7_terms;
    Ok(3.0 / (2.0 * E * PI).powi(2)
        + t[0] / l
        + t[1] / (l * l)
        + t[2] / l.powi(3)
        + t[3] / (x0.powf(0.25) * l * l))
}

/// Evaluate a named constant; `sigma` is ignored by `D3`, `D6` and `D7`.
pub fn divisor_constant(name: DivisorConstant, x0: f64, sigma: f64) -> Result<f64> {
    match name {
        DivisorConstant::D1 => d1(x0, sigma),
        DivisorConstant::D2 => d2(x0, sigma),
        DivisorConstant::D3 => d3(x0),
        DivisorConstant::D4 => d4(x0, sigma),
        DivisorConstant::D5 => d5(x0, sigma),
        DivisorConstant::D6 => d6(x0),
        DivisorConstant::D7 => d7(x0),
    }
}

/// `sum_{n <= x} d(n)^2` as `x P(log x)` with cubic `P`.
///
/// The radius is the remainder envelope `9.73 x^{3/4} log x` plus the
/// half-widths of the coefficient enclosures.
pub fn d2_summatory(x: f64) -> Result<Bracket> {
    if !(x >= 2.0) || !x.is_finite() {
        return domain(format!("need finite x >= 2, got {x}"));
    }
    let c = &CONSTANTS;
    let l = x.ln();
    let mid = |(lo, hi): (f64, f64)| 0.5 * (lo + hi);
    let half = |(lo, hi): (f64, f64)| 0.5 * (hi - lo);
    let value = x
        * (l.powi(3) / (PI * PI) + mid(c.d2_coeff) * l * l + mid(c.d3_coeff) * l + mid(c.d4_coeff));
    let spread = x * (half(c.d2_coeff) * l * l + half(c.d3_coeff) * l + half(c.d4_coeff));
    Ok(Bracket::new(value, c.d2_error * x.powf(0.75) * l + spread))
}

#[cfg(test)]
mod tests {
    use super::*;

    // mpmath evaluations of the closed-form bounds at 30 digits.
    #[test]
    fn constants_match_high_precision_oracle() {
        let cases = [
            (d1(3000.0, 0.0).unwrap(), 1.03069763514076),
            (d1(3000.0, -1.0).unwrap(), 1.1779388333652),
            (d2(3000.0, 1.5).unwrap(), 0.702696066305707),
            (d3(3000.0).unwrap(), 0.468969268633869),
            (d4(3000.0, -1.0).unwrap(), 0.155169502811923),
            (d4(3000.0, 0.0).unwrap(), 0.228539743223872),
            (d4(3000.0, 0.5).unwrap(), 0.518674192638991),
            (d5(3000.0, 2.0).unwrap(), 0.417358336998756),
            (d6(3000.0).unwrap(), 0.834416136882519),
            (d7(3000.0).unwrap(), 0.0418035161446063),
        ];
        for (got, want) in cases {
            assert!((got - want).abs() < 1e-13 * want.abs(), "{got} vs {want}");
        }
    }

    #[test]
    fn closed_form_examples() {
        assert!((d3(1e300).unwrap() - 0.367_879_4).abs() < 3e-3);
        assert!(d3(1e300).unwrap() > d3(1e301).unwrap());
        let x0 = 10f64.exp();
        let want = 0.349436 + 0.1155975 + 0.0128359 + 0.154 + 9.73 / (2.5f64.exp() * 100.0);
        assert!((d6(x0).unwrap() - want).abs() < 1e-12);
        assert!((d6(x0).unwrap() - 0.6399).abs() < 1e-4);
    }

    #[test]
    fn domain_edges() {
        assert!(d1(10.0, 0.0).is_ok());
        assert!(d1(10.0, 0.01).is_err());
        assert!(d1(1.9, -1.0).is_err());
        assert!(d2(10.0, 1.0 + 1e-10).is_err());
        assert!(d2(10.0, 1.0 + 1e-6).is_ok());
        assert!(d4(10.0, -3.0).is_ok());
        assert!(d4(10.0, -3.01).is_err());
        assert!(d4(10.0, 1.0).is_err());
        assert!(d5(10.0, 1.0).is_err());
        assert!(d7(54.0).is_err());
        assert!(d7(55.0).is_ok());
        assert!(divisor_constant(DivisorConstant::D4, 10.0, 2.0).is_err());
    }

    #[test]
    fn summatory_small_cases() {
        assert!(d2_summatory(2.0).unwrap().contains(5.0));
        assert!(d2_summatory(1.5).is_err());
        let a = d2_summatory(10.0).unwrap().value;
        let b = d2_summatory(20.0).unwrap().value;
        assert!(b > a);
    }
}
