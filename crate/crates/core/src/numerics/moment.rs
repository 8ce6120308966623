//! Numerical power moments `M_k(A, B) = ∫_A^B |ζ(1/2+it)|^{2k} dt`.

use super::quadrature::{integrate_finite, QuadratureConfig};
use super::zeta::zeta_half;
use super::KahanSum;
use crate::bracket::Bracket;
use crate::error::{Error, Result};
use rayon::prelude::*;
use std::f64::consts::{E, PI};

/// Panel endpoints: width at most `2π/(4 log t)` (a quarter of the mean zero
/// gap), capped at 1/2.
pub fn moment_panels(a: f64, b: f64) -> Vec<f64> {
    let mut pts = vec![a];
    let mut t = a;
    while t < b {
        let w = if t > E {
            (2.0 * PI / (4.0 * t.ln())).min(0.5)
        } else {
            0.5
        };
        t = (t + w).min(b);
        pts.push(t);
    }
    pts
}

/// `M_k(A, B)` by panelled adaptive quadrature.
///
/// Panels are integrated in parallel; the reduction runs left to right with
/// compensated summation, so the result does not depend on the thread count.
pub fn moment_numeric(k: f64, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Bracket> {
    if !(k > 0.0) {
        return Err(Error::Domain(format!(
            "moment order must be positive, got {k}"
        )));
    }
    if !(a >= 0.0 && b >= a) {
        return Err(Error::Domain(format!("need 0 <= A <= B, got A={a}, B={b}")));
    }
    if b > cfg.moment_ceiling {
        return Err(Error::BudgetExceeded {
            max: cfg.moment_ceiling as usize,
            estimate: b,
            target: cfg.moment_ceiling,
        });
    }
    if a == b {
        return Ok(Bracket::exact(0.0));
    }
    let pts = moment_panels(a, b);
    let panel_cfg = QuadratureConfig {
        rel_tol: cfg.rel_tol.min(1e-9),
        abs_tol: cfg.abs_tol,
        ..*cfg
    };
    let parts: Vec<Result<(Bracket, f64)>> = pts
        .par_windows(2)
        .map(|w| {
            let f = |t: f64| zeta_half(t).norm().powf(2.0 * k);
            let r = integrate_finite(f, w[0], w[1], &panel_cfg)?;
            // Propagated evaluation error: d|ζ|^{2k} ≤ 2k |ζ|^{2k-1} δ.
            let mid = zeta_half(0.5 * (w[0] + w[1]));
            let prop =
                2.0 * k * (mid.norm() + 1.0).powf(2.0 * k - 1.0) * mid.abs_err * (w[1] - w[0]);
            Ok((r, prop))
        })
        .collect();
    let mut acc = KahanSum::default();
    let mut err = 0.0;
    for p in parts {
        let (r, prop) = p?;
        acc.add(r.value);
        err += r.abs_err + prop;
    }
    Ok(Bracket::new(acc.value(), err))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_interval() {
        let r = moment_numeric(2.0, 5.0, 5.0, &QuadratureConfig::default()).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn panels_cover_interval() {
        let p = moment_panels(0.0, 1000.0);
        assert_eq!(p[0], 0.0);
        assert_eq!(*p.last().unwrap(), 1000.0);
        for w in p.windows(2) {
            assert!(w[1] > w[0] && w[1] - w[0] <= 0.5 + 1e-12);
        }
    }

    #[test]
    fn ceiling_is_enforced() {
        let e = moment_numeric(2.0, 0.0, 2e5, &QuadratureConfig::default()).unwrap_err();
        assert!(matches!(e, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn first_power_moment_matches_ingham_asymptotic() {
        // M_1(T) ~ T p(log T) with p(x) = x + 2γ - 1 - log 2π, within 10%
        for t in [500.0, 2000.0] {
            let m = moment_numeric(1.0, 0.0, t, &QuadratureConfig::default()).unwrap();
            let main = t * (t.ln() + 2.0 * crate::EULER_GAMMA - 1.0 - (2.0 * PI).ln());
            let ratio = m.value / main;
            assert!((ratio - 1.0).abs() < 0.1, "T={t}: ratio {ratio}");
        }
    }
}
