//! Mean square of Dirichlet polynomials on vertical segments.

use crate::bracket::Bracket;
use crate::constants::CONSTANTS;
use crate::error::{domain, Result};
use crate::numerics::{integrate_with_breaks, QuadratureConfig};
use num_complex::Complex64;
use std::f64::consts::PI;

fn check(coeffs: &[(u64, Complex64)], t1: f64, t2: f64) -> Result<()> {
    if !(t1 > 0.0 && t2 >= t1 && t2.is_finite()) {
        return domain(format!("need 0 < T1 <= T2, got T1={t1}, T2={t2}"));
    }
    if coeffs
        .iter()
        .any(|&(n, a)| n == 0 || !a.re.is_finite() || !a.im.is_finite())
    {
        return domain("coefficients need n >= 1 and finite values");
    }
    Ok(())
}

/// `int_{T1}^{T2} |sum a_n n^{it}|^2 dt` lies within `2 pi m0 sum (n + 1/2)|a_n|^2`
/// of `(T2 - T1) sum |a_n|^2`.
pub fn mean_value_bracket(coeffs: &[(u64, Complex64)], t1: f64, t2: f64) -> Result<Bracket> {
    check(coeffs, t1, t2)?;
    let diag: f64 = coeffs.iter().map(|(_, a)| a.norm_sqr()).sum();
    let off: f64 = coeffs
        .iter()
        .map(|&(n, a)| (n as f64 + 0.5) * a.norm_sqr())
        .sum();
    Ok(Bracket::new(
        (t2 - t1) * diag,
        2.0 * PI * CONSTANTS.m0 * off,
    ))
}

/// The same integral by adaptive quadrature, with unit-spaced breakpoints.
pub fn mean_square_numeric(
    coeffs: &[(u64, Complex64)],
    t1: f64,
    t2: f64,
    cfg: &QuadratureConfig,
) -> Result<Bracket> {
    check(coeffs, t1, t2)?;
    let logs: Vec<(f64, Complex64)> = coeffs.iter().map(|&(n, a)| ((n as f64).ln(), a)).collect();
    let f = |t: f64| {
        logs.iter()
            .map(|&(l, a)| a * Complex64::from_polar(1.0, t * l))
            .sum::<Complex64>()
            .norm_sqr()
    };
    let breaks: Vec<f64> = (1..)
        .map(|k| t1 + k as f64)
        .take_while(|&b| b < t2)
        .collect();
    integrate_with_breaks(f, t1, t2, &breaks, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn single_term_is_exact() {
        let b = mean_value_bracket(&[(1, c(1.0))], 1.0, 5.0).unwrap();
        assert_eq!(b.value, 4.0);
        assert!((b.abs_err - 2.0 * PI * CONSTANTS.m0 * 1.5).abs() < 1e-12);
        assert!(b.contains(4.0));
    }

    #[test]
    fn two_terms_closed_form() {
        // |1 + 2^{it}|^2 = 2 + 2 cos(t log 2).
        let l2 = 2f64.ln();
        let exact = 20.0 + 2.0 * ((20.0 * l2).sin() - (10.0 * l2).sin()) / l2;
        let coeffs = [(1, c(1.0)), (2, c(1.0))];
        let q = mean_square_numeric(&coeffs, 10.0, 20.0, &QuadratureConfig::default()).unwrap();
        assert!((q.value - exact).abs() < 1e-9);
        assert!(mean_value_bracket(&coeffs, 10.0, 20.0)
            .unwrap()
            .contains(exact));
    }

    #[test]
    fn divisor_weights_inside_bracket() {
        let t = crate::divisor::divisor_sieve(50).unwrap();
        let coeffs: Vec<_> = (1..=50u64)
            .map(|n| (n, c(t.d(n) as f64 / (n as f64).sqrt())))
            .collect();
        let q = mean_square_numeric(&coeffs, 100.0, 200.0, &QuadratureConfig::default()).unwrap();
        assert!(mean_value_bracket(&coeffs, 100.0, 200.0)
            .unwrap()
            .contains(q.value));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(mean_value_bracket(&[(0, c(1.0))], 1.0, 2.0).is_err());
        assert!(mean_value_bracket(&[(1, c(1.0))], 2.0, 1.0).is_err());
        assert!(mean_value_bracket(&[(1, c(1.0))], 0.0, 1.0).is_err());
    }
}
