//! Bounds on the fourth power moment and its corollaries.

use super::params::{check_growth_conditions, MomentParams};
use super::terms::{CoreConstants, MomentConstants};
use crate::bracket::Bracket;
use crate::constants::CONSTANTS;
use crate::error::{domain, Error, Result};
use serde::Serialize;
use std::f64::consts::{LN_2, PI};

const PI2: f64 = PI * PI;

/// Two-sided bound on `M2(T, 2T)` and the separate upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OctaveBounds {
    /// Center `T log^4 T / (2 pi^2)`, radius `F1 T log^3 T`.
    pub interval: Bracket,
    /// `T log^4 T / pi^2 + (2 sum (J_n log T / pi^2 + 2 J1 J_n)^{1/2} + F2) T log^3 T`.
    pub upper: f64,
}

/// Bounds on `M2(T0, T)` from summing octave bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CumulativeBounds {
    /// Upper bound with main term `T log^4(T/2) / (2 pi^2)` and error `F1`.
    pub upper: f64,
    /// Matching lower bound.
    pub lower: f64,
    /// Upper bound with main term `T log^4(T/2) / pi^2`, valid with only `F2`.
    pub upper_large: f64,
}

/// Fully numerical bounds on `M2(T) = M2(0, T)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FinalBounds {
    /// For `T >= 3000`.
    pub upper_half_power: f64,
    /// For `T >= 1e5`, absent below.
    pub upper_asymptotic: Option<f64>,
    /// For `T >= 1e5`, absent below.
    pub lower_asymptotic: Option<f64>,
}

/// `2 sum_{n=3}^{6} (J_n L / pi^2 + 2 J1 J_n)^{1/2} + F2`.
pub fn crude_coefficient(core: &CoreConstants, log_t: f64) -> f64 {
    let s: f64 = core
        .j3_to_j6()
        .iter()
        .map(|j| (j * log_t / PI2 + 2.0 * core.j1 * j).sqrt())
        .sum();
    2.0 * s + core.f2
}

fn require_conditions(p: &MomentParams, t: f64) -> Result<()> {
    let r = check_growth_conditions(p, t);
    if !r.holds {
        return Err(Error::ConditionsViolated(format!(
            "growth conditions fail at T = {t} (T0 = {}, worst slack {:e})",
            p.t0, r.rhs
        )));
    }
    Ok(())
}

/// Bounds on `M2(T, 2T)` for `T >= T0` under the growth conditions at `T`.
pub fn theorem2_interval(t: f64, p: &MomentParams, m: &MomentConstants) -> Result<OctaveBounds> {
    require_conditions(p, t)?;
    let l = t.ln();
    let t_l3 = t * l.powi(3);
    Ok(OctaveBounds {
        interval: Bracket::new(t * l.powi(4) / (2.0 * PI2), m.f1 * t_l3),
        upper: t * l.powi(4) / PI2 + crude_coefficient(&m.core, l) * t_l3,
    })
}

/// Octave starts `T / 2^{n+1} >= T0` used by the dyadic partition of `[T0, T]`.
pub fn dyadic_points(t: f64, t0: f64) -> Vec<f64> {
    let mut out = Vec::new();
    let mut s = t / 2.0;
    while s >= t0 {
        out.push(s);
        s /= 2.0;
    }
    out
}

/// Bounds on `M2(T0, T)` for `T >= T0`, with `seed` enclosing `M2(T0, 2T0)`.
pub fn dyadic_bounds(
    t: f64,
    p: &MomentParams,
    m: &MomentConstants,
    seed: Bracket,
) -> Result<CumulativeBounds> {
    let t0 = p.t0;
    if !(t >= t0 && t.is_finite()) {
        return domain(format!("need T >= T0 = {t0}, got {t}"));
    }
    for s in dyadic_points(t, t0) {
        require_conditions(p, s)?;
    }
    let l = (t / 2.0).ln();
    let (l3, l4) = (l.powi(3), l.powi(4));
    let main = t * l4 / (2.0 * PI2);
    Ok(CumulativeBounds {
        upper: main + m.f1 * t * l3 + seed.hi(),
        lower: main - (2.0 * LN_2 / PI2 + m.f1) * t * l3 - t0 / PI2 * l4,
        upper_large: 2.0 * main + crude_coefficient(&m.core, l) * t * l3 + seed.hi(),
    })
}

/// Final numerical bounds on `M2(T)` for `T >= 3000`.
pub fn corollary2_bounds(t: f64) -> Result<FinalBounds> {
    let c = &CONSTANTS;
    if !(t >= c.half_power_from && t.is_finite()) {
        return domain(format!(
            "bounds on M2(T) need T >= {}, got {t}",
            c.half_power_from
        ));
    }
    let l = (t / 2.0).ln();
    let upper_half_power =
        t * l.powi(4) / PI2 + c.fourth_moment_c1 * t * l.powf(3.5) + c.fourth_moment_c1_additive;
    let (upper_asymptotic, lower_asymptotic) = if t >= c.asymptotic_from {
        let main = t * l.powi(4) / (2.0 * PI2);
        let t_l3 = t * l.powi(3);
        let lower_coeff = c.fourth_moment_lower + c.asymptotic_from * t.ln() / (PI2 * t);
        (
            Some(main + c.fourth_moment_f1 * t_l3 + c.fourth_moment_additive),
            Some(main - lower_coeff * t_l3),
        )
    } else {
        (None, None)
    };
    Ok(FinalBounds {
        upper_half_power,
        upper_asymptotic,
        lower_asymptotic,
    })
}

/// `(a1, a2)` with `M2(A0) <= a1` and `M2(A0, T) <= a2 T log^4 T` for `T >= A0 >= 1e5`.
pub fn a_constants(a0: f64) -> Result<(f64, f64)> {
    let c = &CONSTANTS;
    if !(a0 >= c.asymptotic_from && a0.is_finite()) {
        return domain(format!(
            "a-constants need A0 >= {}, got {a0}",
            c.asymptotic_from
        ));
    }
    let lh = (a0 / 2.0).ln();
    let a1 = a0 * lh.powi(4) / (2.0 * PI2) + c.fourth_moment_f1 * a0 * lh.powi(3) + c.a1_additive;
    let l = a0.ln();
    let r = 1.0 - LN_2 / l;
    let a2 = r.powi(4) / (2.0 * PI2)
        + c.fourth_moment_f1 / l * r.powi(3)
        + c.a2_additive / (a0 * l.powi(4));
    Ok((a1, a2))
}

/// Coefficient of `T log^{5/2} T` in the bound on `M_{3/2}(T)` for `T >= T0 >= 1e5`.
pub fn third_moment_coeff(t0: f64) -> Result<f64> {
    let c = &CONSTANTS;
    if !(t0 >= c.asymptotic_from && t0.is_finite()) {
        return domain(format!(
            "third-moment coefficient needs T0 >= {}, got {t0}",
            c.asymptotic_from
        ));
    }
    let l = t0.ln();
    Ok((1.0 / (2.0 * PI2) + c.third_moment_lin / l + c.third_moment_quad / (l * l)).sqrt())
}

/// `12 sqrt(T) e^{-pi T/2} log T` for `T >= 5`.
pub fn residue_bound(t: f64) -> Result<f64> {
    if !(t >= 5.0) {
        return domain(format!("residue bound needs T >= 5, got {t}"));
    }
    Ok(CONSTANTS.residue_coeff * (0.5 * t.ln() - PI * t / 2.0).exp() * t.ln())
}

/// `(2T)^{1/6} log(2T)`, bounding `|zeta(1/2 + it)|` on `T <= t <= 2T`.
pub fn zeta_sixth_envelope(t: f64, big_t: f64) -> Result<f64> {
    if !(big_t >= 3.0 && t >= big_t && t <= 2.0 * big_t) {
        return domain(format!(
            "envelope needs T >= 3 and T <= t <= 2T, got t={t}, T={big_t}"
        ));
    }
    Ok((2.0 * big_t).powf(1.0 / 6.0) * (2.0 * big_t).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moment4::terms::moment_constants;
    use crate::numerics::{zeta_half, QuadratureConfig};
    use proptest::prelude::*;
    use std::sync::OnceLock;

    // Critical-line quadrature, 1e-8 relative.
    const M2_0_3000: f64 = 703127.633;
    const M2_3000_6000: f64 = 1249636.0016;

    fn constants(which: u8) -> &'static MomentConstants {
        static HALF: OnceLock<MomentConstants> = OnceLock::new();
        static ASYM: OnceLock<MomentConstants> = OnceLock::new();
        let cfg = QuadratureConfig::default();
        match which {
            0 => HALF
                .get_or_init(|| moment_constants(&MomentParams::half_power_set(), &cfg).unwrap()),
            _ => ASYM
                .get_or_init(|| moment_constants(&MomentParams::asymptotic_set(), &cfg).unwrap()),
        }
    }

    #[test]
    fn octave_interval_contains_numeric_moment() {
        let p = MomentParams::half_power_set();
        let b = theorem2_interval(3000.0, &p, constants(0)).unwrap();
        assert!(b.interval.contains(M2_3000_6000));
        assert!(b.upper >= M2_3000_6000);
    }

    #[test]
    fn octave_radius_scaling() {
        let p = MomentParams::asymptotic_set();
        let r1 = theorem2_interval(2e5, &p, constants(1))
            .unwrap()
            .interval
            .abs_err;
        let r2 = theorem2_interval(4e5, &p, constants(1))
            .unwrap()
            .interval
            .abs_err;
        let ratio = r2 / r1;
        assert!(ratio > 2.0 && ratio < 2.0 * (4e5f64.ln() / 2e5f64.ln()).powi(3));
        assert!(constants(1).f1 <= CONSTANTS.fourth_moment_f1);
    }

    #[test]
    fn octave_below_base_is_rejected() {
        let p = MomentParams::half_power_set();
        let e = theorem2_interval(2999.0, &p, constants(0)).unwrap_err();
        assert!(matches!(e, Error::ConditionsViolated(_)));
    }

    #[test]
    fn dyadic_points_partition() {
        assert_eq!(dyadic_points(12000.0, 3000.0), vec![6000.0, 3000.0]);
        assert!(dyadic_points(5000.0, 3000.0).is_empty());
        assert_eq!(dyadic_points(1e4, 3000.0), vec![5000.0]);
    }

    #[test]
    fn dyadic_bounds_on_first_octave() {
        let p = MomentParams::half_power_set();
        let seed = Bracket::new(M2_3000_6000, 1.0);
        let b = dyadic_bounds(6000.0, &p, constants(0), seed).unwrap();
        assert!(b.upper >= M2_3000_6000 && b.upper_large >= M2_3000_6000);
        assert!(b.lower <= M2_3000_6000);
        let b = dyadic_bounds(3000.0, &p, constants(0), seed).unwrap();
        assert!(b.upper >= seed.hi() && b.lower <= 0.0);
        assert!(dyadic_bounds(2000.0, &p, constants(0), seed).is_err());
    }

    #[test]
    fn final_bounds_dominate_numeric_moment() {
        let b = corollary2_bounds(3000.0).unwrap();
        assert!(b.upper_half_power >= M2_0_3000);
        assert!(b.upper_asymptotic.is_none() && b.lower_asymptotic.is_none());
        let b = corollary2_bounds(6000.0).unwrap();
        assert!(b.upper_half_power >= M2_0_3000 + M2_3000_6000);
        let b = corollary2_bounds(1e5).unwrap();
        assert!(b.lower_asymptotic.unwrap() <= b.upper_asymptotic.unwrap());
        assert!(corollary2_bounds(2999.0).is_err());
    }

    #[test]
    fn a_constants_by_substitution() {
        let (a1, a2) = a_constants(1e5).unwrap();
        let lh = 5e4f64.ln();
        let l = 1e5f64.ln();
        let want1 = 1e5 * lh.powi(4) / (2.0 * PI2) + 48.801 * 1e5 * lh.powi(3) + 3.0592e10;
        let r = 1.0 - LN_2 / l;
        let want2 =
            r.powi(4) / (2.0 * PI2) + 48.801 / l * r.powi(3) + 2.1817e10 / (1e5 * l.powi(4));
        assert!((a1 - want1).abs() <= 1e-12 * want1);
        assert!((a2 - want2).abs() <= 1e-12 * want2);
        assert!(a_constants(1e6).unwrap().1 < a2);
        let (b1, b2) = a_constants(10f64.powf(10.3)).unwrap();
        assert!(b1 > a1 && b2 < a2 && b2 > 1.0 / (2.0 * PI2));
        assert!(a_constants(9.9e4).is_err());
    }

    #[test]
    fn third_moment_values() {
        let l = 1e5f64.ln();
        let c = third_moment_coeff(1e5).unwrap();
        assert!((c - 4.689).abs() < 1e-3, "{c}");
        assert_eq!(c, (1.0 / (2.0 * PI2) + 241.03 / l + 132.1 / (l * l)).sqrt());
        // Excess over the limit 1/sqrt(2 pi^2) ~ 0.22508 decays like 1/log T0.
        let limit = (1.0 / (2.0 * PI2)).sqrt();
        assert!((limit - 0.22508).abs() < 1e-5);
        let mut last = f64::INFINITY;
        for t0 in [1e5, 1e10, 1e50, 1e300] {
            let l = f64::ln(t0);
            let c = third_moment_coeff(t0).unwrap();
            assert!(c > limit && c < last);
            assert!(c * c - limit * limit <= 253.0 / l);
            last = c;
        }
        for t0 in [1e5, 1e7, 1e10, 1e20] {
            let l = f64::ln(t0);
            let cbs = (1.0 + 0.548 / l) * (1.0 / (2.0 * PI2) + 241.0 / l);
            assert!(third_moment_coeff(t0).unwrap().powi(2) >= cbs * (1.0 - 1e-3));
        }
        assert!(third_moment_coeff(5e4).is_err());
    }

    #[test]
    fn residue_values() {
        let want = 12.0 * 5f64.sqrt() * (-5.0 * PI / 2.0).exp() * 5f64.ln();
        assert!((residue_bound(5.0).unwrap() - want).abs() <= 1e-15 * want);
        let mut last = f64::INFINITY;
        for k in 0..200 {
            let v = residue_bound(5.0 + 0.5 * k as f64).unwrap();
            assert!(v < last);
            last = v;
        }
        assert!(residue_bound(1e4).unwrap() == 0.0);
        assert!(residue_bound(4.9).is_err());
    }

    #[test]
    fn sixth_envelope_dominates_zeta() {
        let e = zeta_sixth_envelope(3000.0, 3000.0).unwrap();
        assert_eq!(e, 6000f64.powf(1.0 / 6.0) * 6000f64.ln());
        assert_eq!(zeta_sixth_envelope(6000.0, 3000.0).unwrap(), e);
        for k in 0..100 {
            let t = 3000.0 + 30.0 * k as f64 + 0.37;
            let z = zeta_half(t);
            assert!(z.norm() + z.abs_err <= e);
        }
        assert!(zeta_sixth_envelope(2999.0, 3000.0).is_err());
        assert!(zeta_sixth_envelope(2.5, 2.0).is_err());
    }

    proptest! {
        #[test]
        fn final_upper_grows(t in 3000f64..1e9, f in 1.0f64..4.0) {
            let a = corollary2_bounds(t).unwrap();
            let b = corollary2_bounds(t * f).unwrap();
            prop_assert!(b.upper_half_power > a.upper_half_power);
        }

        #[test]
        fn a2_decreasing(a in 1e5f64..1e15, f in 1.01f64..10.0) {
            prop_assert!(a_constants(a * f).unwrap().1 < a_constants(a).unwrap().1);
        }
    }
}
