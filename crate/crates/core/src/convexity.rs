//! Convexity of power moments across a vertical strip: interpolation
//! weights, exponents `mu(k, l; x)` and the constant `M(x)`.

use crate::error::{domain, Result};
use crate::numerics::{integrate_exp_weighted, QuadratureConfig};
use serde::{Deserialize, Serialize};

/// Moment hypothesis on one edge of the strip:
/// `int_{-T}^{T} |f|^b dy <= m T^a (log T)^c` for `T >= T0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeBound {
    pub m: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// A strip `alpha <= Re z <= beta` with moment bounds on both edges.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripSpec {
    pub alpha: f64,
    pub beta: f64,
    pub left: EdgeBound,
    pub right: EdgeBound,
    pub kappa: f64,
    pub t0: f64,
}

impl StripSpec {
    pub fn new(
        alpha: f64,
        beta: f64,
        left: EdgeBound,
        right: EdgeBound,
        kappa: f64,
        t0: f64,
    ) -> Result<Self> {
        let s = StripSpec {
            alpha,
            beta,
            left,
            right,
            kappa,
            t0,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha >= 0.5 && self.alpha < self.beta && self.beta.is_finite()) {
            return domain(format!(
                "need 1/2 <= alpha < beta, got alpha={}, beta={}",
                self.alpha, self.beta
            ));
        }
        for e in [self.left, self.right] {
            if !(e.m > 0.0 && e.a > 0.0 && e.b >= 1.0 && e.c >= 0.0)
                || !(e.m.is_finite() && e.a.is_finite() && e.b.is_finite() && e.c.is_finite())
            {
                return domain(format!(
                    "edge bound needs M > 0, a > 0, b >= 1, c >= 0, got {e:?}"
                ));
            }
        }
        if !(self.kappa > 0.0 && self.kappa.is_finite()) {
            return domain(format!("kappa must be positive, got {}", self.kappa));
        }
        if !(self.t0 >= 2.0 && self.t0.is_finite()) {
            return domain(format!("T0 must be at least 2, got {}", self.t0));
        }
        Ok(())
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !(x >= self.alpha && x <= self.beta) {
            return domain(format!("x = {x} outside [{}, {}]", self.alpha, self.beta));
        }
        Ok(())
    }

    /// `C = M (1 + int_0^inf e^{-u} (u/(kappa b))^{a/2} (1 + log(1 + u/(kappa b))/(2 log T0))^c du)`.
    pub fn edge_constant(&self, edge: &EdgeBound, cfg: &QuadratureConfig) -> Result<f64> {
        let kb = self.kappa * edge.b;
        let lt = 2.0 * self.t0.ln();
        let g = |u: f64| (u / kb).powf(edge.a / 2.0) * (1.0 + (u / kb).ln_1p() / lt).powf(edge.c);
        let integral = integrate_exp_weighted(g, 0.0, cfg)?;
        Ok(edge.m * (1.0 + integral.value))
    }
}

/// Linear interpolation weights `((beta - x)/(beta - alpha), (x - alpha)/(beta - alpha))`.
pub fn weights(x: f64, alpha: f64, beta: f64) -> Result<(f64, f64)> {
    if !(alpha < beta) || !(x >= alpha && x <= beta) {
        return domain(format!(
            "need alpha <= x <= beta with alpha < beta, got x={x}, alpha={alpha}, beta={beta}"
        ));
    }
    let w1 = (beta - x) / (beta - alpha);
    Ok((w1, 1.0 - w1))
}

/// `mu(k, l; x) = (k b2 (beta - x) + l b1 (x - alpha)) / (b2 (beta - x) + b1 (x - alpha))`.
pub fn convexity_exponent(k: f64, l: f64, x: f64, spec: &StripSpec) -> Result<f64> {
    spec.check_x(x)?;
    let p = spec.right.b * (spec.beta - x);
    let q = spec.left.b * (x - spec.alpha);
    Ok((k * p + l * q) / (p + q))
}

/// `M(x) = exp(kappa mu(b1, b2; x)(1 + ((beta - alpha)/(2 T0))^2)) C1^{mu(1,0;x)} C2^{mu(0,1;x)}`.
pub fn convexity_constant(x: f64, spec: &StripSpec, cfg: &QuadratureConfig) -> Result<f64> {
    spec.validate()?;
    spec.check_x(x)?;
    let c1 = spec.edge_constant(&spec.left, cfg)?;
    let c2 = spec.edge_constant(&spec.right, cfg)?;
    let mb = convexity_exponent(spec.left.b, spec.right.b, x, spec)?;
    let m10 = convexity_exponent(1.0, 0.0, x, spec)?;
    let m01 = convexity_exponent(0.0, 1.0, x, spec)?;
    let width = (spec.beta - spec.alpha) / (2.0 * spec.t0);
    Ok((spec.kappa * mb * (1.0 + width * width) + m10 * c1.ln() + m01 * c2.ln()).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn edge(m: f64, a: f64, b: f64, c: f64) -> EdgeBound {
        EdgeBound { m, a, b, c }
    }

    fn typical() -> StripSpec {
        StripSpec::new(
            0.5,
            0.75,
            edge(1.0, 1.0, 2.0, 1.0),
            edge(1.0, 1.0, 2.0, 4.0),
            1.0,
            100.0,
        )
        .unwrap()
    }

    #[test]
    fn weight_endpoints() {
        assert_eq!(weights(0.5, 0.5, 0.75).unwrap(), (1.0, 0.0));
        assert_eq!(weights(0.625, 0.5, 0.75).unwrap(), (0.5, 0.5));
        assert!(weights(0.8, 0.5, 0.75).is_err());
        assert!(weights(0.5, 0.5, 0.5).is_err());
    }

    #[test]
    fn weights_for_mollifier_strip() {
        // beta = 1 + delta/log X with delta = 1, X = 1e12.
        let beta = 1.0 + 1.0 / 1e12f64.ln();
        let (w1, w2) = weights(0.53125, 0.5, beta).unwrap();
        assert!((w1 - 0.941_718_551_885_571).abs() < 1e-14);
        assert!((w2 - 0.058_281_448_114_429).abs() < 1e-14);
    }

    #[test]
    fn exponent_examples() {
        let s = typical();
        assert_eq!(convexity_exponent(1.0, 1.0, 0.6, &s).unwrap(), 1.0);
        assert_eq!(convexity_exponent(2.0, 5.0, 0.5, &s).unwrap(), 2.0);
        assert_eq!(convexity_exponent(2.0, 5.0, 0.75, &s).unwrap(), 5.0);
        assert!((convexity_exponent(2.0, 4.0, 0.625, &s).unwrap() - 3.0).abs() < 1e-15);
        assert!(convexity_exponent(2.0, 4.0, 0.4, &s).is_err());
    }

    #[test]
    fn edge_constants_reduce_to_gamma_values() {
        let cfg = QuadratureConfig::default();
        let s = StripSpec::new(
            0.5,
            0.75,
            edge(3.0, 2.0, 1.0, 0.0),
            edge(1.0, 1.0, 1.0, 0.0),
            1.0,
            100.0,
        )
        .unwrap();
        assert!((s.edge_constant(&s.left, &cfg).unwrap() - 6.0).abs() < 1e-9);
        let want = 1.0 + std::f64::consts::PI.sqrt() / 2.0;
        assert!((s.edge_constant(&s.right, &cfg).unwrap() - want).abs() < 1e-9);
    }

    #[test]
    fn typical_constant_matches_quadrature_oracle() {
        // mpmath: C1 = 1.66123930050904, C2 = 1.78167202093357.
        let cfg = QuadratureConfig::default();
        let s = typical();
        assert!((s.edge_constant(&s.left, &cfg).unwrap() - 1.66123930050904).abs() < 1e-9);
        assert!((s.edge_constant(&s.right, &cfg).unwrap() - 1.78167202093357).abs() < 1e-9);
        let m = convexity_constant(0.625, &s, &cfg).unwrap();
        assert!((m - 12.7121877762803).abs() < 1e-8, "{m}");
    }

    #[test]
    fn endpoints_use_one_edge() {
        let cfg = QuadratureConfig::default();
        let s = typical();
        let pre = (2.0 * (1.0 + (0.25f64 / 200.0).powi(2))).exp();
        let c1 = s.edge_constant(&s.left, &cfg).unwrap();
        assert!((convexity_constant(0.5, &s, &cfg).unwrap() - pre * c1).abs() < 1e-9);
    }

    #[test]
    fn invalid_specs() {
        assert!(StripSpec::new(
            0.4,
            0.75,
            edge(1.0, 1.0, 2.0, 1.0),
            edge(1.0, 1.0, 2.0, 1.0),
            1.0,
            100.0
        )
        .is_err());
        assert!(StripSpec::new(
            0.5,
            0.75,
            edge(1.0, 1.0, 0.5, 1.0),
            edge(1.0, 1.0, 2.0, 1.0),
            1.0,
            100.0
        )
        .is_err());
        assert!(StripSpec::new(
            0.5,
            0.75,
            edge(1.0, 1.0, 2.0, 1.0),
            edge(1.0, 1.0, 2.0, 1.0),
            0.0,
            100.0
        )
        .is_err());
        assert!(StripSpec::new(
            0.5,
            1.25,
            edge(1.0, 1.0, 2.0, 1.0),
            edge(1.0, 1.0, 2.0, 1.0),
            1.0,
            100.0
        )
        .is_ok());
    }

    proptest! {
        #[test]
        fn weights_sum_to_one(alpha in 0.5f64..0.9, width in 0.01f64..1.0, t in 0.0f64..=1.0) {
            let beta = alpha + width;
            let x = (alpha + t * width).min(beta);
            let (w1, w2) = weights(x, alpha, beta).unwrap();
            prop_assert!(w1 >= 0.0 && w2 >= 0.0);
            prop_assert!((w1 + w2 - 1.0).abs() <= f64::EPSILON);
        }

        #[test]
        fn exponent_monotone(b1 in 1.0f64..6.0, b2 in 1.0f64..6.0, k in 0.0f64..5.0, d in 0.0f64..5.0, t in 0.0f64..0.99) {
            let s = StripSpec::new(0.5, 0.8, edge(1.0, 1.0, b1, 0.0), edge(1.0, 1.0, b2, 0.0), 1.0, 10.0).unwrap();
            let x1 = 0.5 + 0.3 * t;
            let x2 = (x1 + 0.003).min(0.8);
            let l = k + d;
            let (m1, m2) = (convexity_exponent(k, l, x1, &s).unwrap(), convexity_exponent(k, l, x2, &s).unwrap());
            prop_assert!(m1 <= m2 + 1e-12);
            prop_assert!(m1 >= k - 1e-12 && m1 <= l + 1e-12);
            prop_assert!((convexity_exponent(k, k, x1, &s).unwrap() - k).abs() < 1e-12);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(20))]
        #[test]
        fn constant_log_convex_for_equal_b(b in 1.0f64..4.0, a1 in 0.2f64..2.0, a2 in 0.2f64..2.0,
                                           c1 in 0.0f64..4.0, c2 in 0.0f64..4.0, m1 in 0.1f64..10.0, m2 in 0.1f64..10.0) {
            let cfg = QuadratureConfig::default();
            let s = StripSpec::new(0.5, 0.9, edge(m1, a1, b, c1), edge(m2, a2, b, c2), 0.7, 50.0).unwrap();
            let lo = convexity_constant(0.5, &s, &cfg).unwrap().ln();
            let hi = convexity_constant(0.9, &s, &cfg).unwrap().ln();
            let mid = convexity_constant(0.7, &s, &cfg).unwrap().ln();
            prop_assert!(mid <= 0.5 * (lo + hi) + 1e-10);
        }
    }
}
