//! Parameters of the fourth-moment theorem and its hypotheses.

use crate::constants::CONSTANTS;
use crate::error::{domain, Result};
use crate::report::VerificationReport;
use serde::{Deserialize, Serialize};

/// Shift `s1 (log T)^{s2}` of the contour for one of the two gamma integrals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ShiftExponents {
    pub scale: f64,
    pub power: f64,
}

impl ShiftExponents {
    /// `scale (log t)^power`.
    pub fn at(&self, t: f64) -> f64 {
        self.scale * t.ln().powf(self.power)
    }
}

/// Base height, contour abscissae and shift exponents.
///
/// `c` holds the abscissae of the two Mellin contours, `sigma` the five
/// auxiliary line abscissae, and `shift_a`, `shift_b` the contour shifts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentParams {
    pub t0: f64,
    pub c: [f64; 2],
    pub sigma: [f64; 5],
    pub shift_a: ShiftExponents,
    pub shift_b: ShiftExponents,
}

fn in_open(x: f64, lo: f64, hi: f64) -> bool {
    x > lo && x < hi
}

impl MomentParams {
    /// Parameter set behind the `T log^{7/2}` bound from `T0 = 3000`. The
    /// line abscissae do not enter that bound; the `T0 = 1e5` ones are used.
    pub fn half_power_set() -> Self {
        MomentParams {
            t0: 3000.0,
            c: [-0.923364, 0.161176],
            sigma: [0.368, 0.718, 0.435, 0.629, 0.3654],
            shift_a: ShiftExponents {
                scale: 0.531241,
                power: 1.52906,
            },
            shift_b: ShiftExponents {
                scale: 0.754804,
                power: 1.68921,
            },
        }
    }

    /// Parameter set behind the asymptotic bound from `T0 = 1e5`.
    pub fn asymptotic_set() -> Self {
        MomentParams {
            t0: 1.0e5,
            c: [-0.938, 0.194],
            sigma: [0.368, 0.718, 0.435, 0.629, 0.3654],
            shift_a: ShiftExponents {
                scale: 1.99,
                power: 1.44,
            },
            shift_b: ShiftExponents {
                scale: 1.33,
                power: 1.45,
            },
        }
    }

    /// Structural conditions on every parameter.
    pub fn validate(&self) -> Result<()> {
        let [c1, c2] = self.c;
        let [s1, s2, s3, s4, s5] = self.sigma;
        let checks = [
            (
                self.t0 >= CONSTANTS.fourth_moment_min_t0 && self.t0.is_finite(),
                "T0 >= 55",
            ),
            (in_open(c1, -1.0, -0.5), "c1 in (-1, -1/2)"),
            (in_open(c2, 0.0, 0.5), "c2 in (0, 1/2)"),
            ((0.0..0.5).contains(&s1), "sigma1 in [0, 1/2)"),
            (s2 > 0.5 && s2 <= 1.0, "sigma2 in (1/2, 1]"),
            ((0.0..0.5).contains(&s3), "sigma3 in [0, 1/2)"),
            (in_open(s4, 0.5, c1.abs()), "sigma4 in (1/2, |c1|)"),
            (in_open(s5, 0.5 - c2, 0.5), "sigma5 in (1/2 - c2, 1/2)"),
            (
                self.shift_a.scale > 0.0 && self.shift_a.power > 1.0,
                "a1 > 0 and a2 > 1",
            ),
            (
                self.shift_b.scale > 0.0 && self.shift_b.power > 1.0,
                "b1 > 0 and b2 > 1",
            ),
        ];
        for (ok, what) in checks {
            if !ok {
                return domain(format!("moment parameters violate {what}: {self:?}"));
            }
        }
        Ok(())
    }

    /// Same checks without the line abscissae, for bounds that do not use them.
    pub fn validate_without_sigma(&self) -> Result<()> {
        let mut p = *self;
        p.sigma = [
            0.25,
            0.75,
            0.25,
            0.5 * (0.5 + self.c[0].abs()),
            0.5 - 0.5 * self.c[1],
        ];
        p.validate()
    }

    fn named_inputs(&self, t: f64) -> Vec<(&'static str, f64)> {
        vec![
            ("T", t),
            ("T0", self.t0),
            ("a1", self.shift_a.scale),
            ("a2", self.shift_a.power),
            ("b1", self.shift_b.scale),
            ("b2", self.shift_b.power),
        ]
    }
}

/// Slack of each growth condition at `t`; all are non-negative exactly when
/// the conditions hold.
fn growth_slacks(p: &MomentParams, t: f64) -> Vec<f64> {
    let (t0, l0, l) = (p.t0, p.t0.ln(), t.ln());
    let mut out = Vec::with_capacity(8);
    for (sh, floor) in [(p.shift_a, 1.0), (p.shift_b, 2.0)] {
        let base = t0 - sh.at(t0);
        out.push((t - sh.at(t)) - base);
        out.push(base - 2.0);
        out.push(l0.powf(sh.power) / t0 - l.powf(sh.power) / t);
        out.push(sh.scale * l0.powf(sh.power - 1.0) - floor);
    }
    out
}

/// Growth conditions on the contour shifts at the height `t`:
/// `t - a1 (log t)^a2 >= T0 - a1 (log T0)^a2 >= 2`,
/// `(log t)^a2 / t <= (log T0)^a2 / T0`, `a1 (log T0)^{a2-1} >= 1`,
/// and the same for `b` with `b1 (log T0)^{b2-1} >= 2`.
///
/// The report's `rhs` is the smallest slack; failures are reported, not raised.
pub fn check_growth_conditions(p: &MomentParams, t: f64) -> VerificationReport {
    let slacks = growth_slacks(p, t);
    let worst = slacks.iter().copied().fold(f64::INFINITY, f64::min);
    let holds = t >= p.t0 && slacks.iter().all(|s| *s >= 0.0);
    VerificationReport::flag("growth_conditions", &p.named_inputs(t), 0.0, worst, holds)
}

/// Sufficient conditions for the growth conditions at every `T >= T0`:
/// the conditions at `T0` itself, `a2 <= log T0` (so `(log T)^a2 / T`
/// decreases) and `a1 a2 (log T0)^{a2-1} <= T0` (so `T - a1 (log T)^a2`
/// increases), likewise for `b`.
pub fn check_growth_conditions_for_all(p: &MomentParams) -> VerificationReport {
    let l0 = p.t0.ln();
    let mut slacks = growth_slacks(p, p.t0);
    for sh in [p.shift_a, p.shift_b] {
        slacks.push(l0 - sh.power);
        slacks.push(p.t0 - sh.scale * sh.power * l0.powf(sh.power - 1.0));
    }
    let worst = slacks.iter().copied().fold(f64::INFINITY, f64::min);
    let holds = slacks.iter().all(|s| *s >= 0.0);
    VerificationReport::flag(
        "growth_conditions_for_all",
        &p.named_inputs(p.t0),
        0.0,
        worst,
        holds,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_sets_are_valid() {
        for p in [
            MomentParams::half_power_set(),
            MomentParams::asymptotic_set(),
        ] {
            p.validate().unwrap();
            assert!(check_growth_conditions_for_all(&p).holds);
            for t in [p.t0, 2.0 * p.t0, 1e7, 1e12] {
                let r = check_growth_conditions(&p, t);
                assert!(r.holds, "{r:?}");
            }
        }
    }

    #[test]
    fn huge_shift_is_reported() {
        let mut p = MomentParams::half_power_set();
        p.shift_a.scale = p.t0;
        let r = check_growth_conditions(&p, p.t0);
        assert!(!r.holds && r.margin < 0.0);
        assert!(!check_growth_conditions_for_all(&p).holds);
    }

    #[test]
    fn below_base_height_fails() {
        let p = MomentParams::half_power_set();
        assert!(!check_growth_conditions(&p, p.t0 - 1.0).holds);
    }

    #[test]
    fn structural_violations() {
        let base = MomentParams::asymptotic_set();
        let mut p = base;
        p.t0 = 50.0;
        assert!(p.validate().is_err());
        let mut p = base;
        p.c[0] = -0.5;
        assert!(p.validate().is_err());
        let mut p = base;
        p.sigma[3] = 0.95;
        assert!(p.validate().is_err());
        let mut p = base;
        p.sigma[4] = 0.2;
        assert!(p.validate().is_err());
        let mut p = base;
        p.shift_b.power = 1.0;
        assert!(p.validate().is_err());
        let mut p = base;
        p.sigma = [9.0; 5];
        assert!(p.validate_without_sigma().is_ok());
    }
}
