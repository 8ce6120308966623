//! Constants of the fourth-moment error term.
//!
//! Naming follows the decomposition of the error term: `J*` bound the
//! individual pieces, `g*` bound mean squares of auxiliary Dirichlet series
//! along vertical lines and `G*` bound the contour pieces assembled from them.

use super::params::MomentParams;
use crate::constants::CONSTANTS;
use crate::divisor::{d1, d2, d3, d4, d5, d6, d7};
use crate::error::{domain, Result};
use crate::numerics::{
    gamma_abs_moment, integrate_exp_weighted, integrate_finite, QuadratureConfig,
};
use serde::Serialize;
use std::cell::RefCell;
use std::collections::BTreeMap;
use std::f64::consts::{E, PI};

/// `1 + pi m0 / T0`.
pub fn eta(t0: f64) -> Result<f64> {
    if !(t0 > 0.0) {
        return domain(format!("eta needs T0 > 0, got {t0}"));
    }
    Ok(1.0 + PI * CONSTANTS.m0 / t0)
}

/// Side of the two-sided bound on `(|z|/2 pi)^{x-1/2} |chi(z)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Envelope {
    Lower,
    Upper,
}

/// `(1 -+ e^{-pi y0})^{-1} exp(+-1/(2 y0^2))` for `y0 >= 2`.
pub fn chi_envelope(y0: f64, side: Envelope) -> Result<f64> {
    if !(y0 >= 2.0) {
        return domain(format!("chi envelope needs y0 >= 2, got {y0}"));
    }
    let q = (-PI * y0).exp();
    let e = 1.0 / (2.0 * y0 * y0);
    Ok(match side {
        Envelope::Lower => (-e).exp() / (1.0 + q),
        Envelope::Upper => e.exp() / (1.0 - q),
    })
}

/// The `J` constants and the two combined error coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum JConstant {
    J0,
    J01,
    J02,
    J1,
    J21,
    J22,
    J3,
    J4,
    J5,
    J6,
    F1,
    F2,
}

/// Mean-square bounds `g1..g8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SmallG {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
    G8,
}

/// Contour-piece bounds `G1..G6`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BigG {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

/// Quantities shared by every constant for one parameter set.
struct Context {
    t0: f64,
    l0: f64,
    eta: f64,
    um: f64,
    shift_a: f64,
    shift_b: f64,
    up_a: f64,
    up_b: f64,
    gamma1: f64,
    gamma2: f64,
    c1: f64,
    c2: f64,
    d1_zero: f64,
    cfg: QuadratureConfig,
}

impl Context {
    fn new(p: &MomentParams, cfg: &QuadratureConfig) -> Result<Self> {
        let t0 = p.t0;
        let shift_a = p.shift_a.at(t0);
        let shift_b = p.shift_b.at(t0);
        Ok(Context {
            t0,
            l0: t0.ln(),
            eta: eta(t0)?,
            um: chi_envelope(t0, Envelope::Lower)?,
            shift_a,
            shift_b,
            up_a: chi_envelope(t0 - shift_a, Envelope::Upper)?,
            up_b: chi_envelope(t0 - shift_b, Envelope::Upper)?,
            gamma1: gamma_abs_moment(p.c[0], cfg)?.value,
            gamma2: gamma_abs_moment(p.c[1], cfg)?.value,
            c1: p.c[0].abs(),
            c2: p.c[1],
            d1_zero: d1(t0, 0.0)?,
            cfg: *cfg,
        })
    }

    fn m0(&self) -> f64 {
        CONSTANTS.m0
    }

    /// `eta D4(T0, s) + 2 pi m0 D4(T0, s - 1)`.
    fn d4_pair(&self, s: f64) -> Result<f64> {
        Ok(self.eta * d4(self.t0, s)? + 2.0 * PI * self.m0() * d4(self.t0, s - 1.0)?)
    }

    fn integrate<F: Fn(f64) -> Result<f64>>(&self, f: F, a: f64, b: f64) -> Result<f64> {
        let failure = RefCell::new(None);
        let g = |s: f64| match f(s) {
            Ok(v) => v,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        };
        let r = integrate_finite(g, a, b, &self.cfg);
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        Ok(r?.value)
    }

    fn j1(&self) -> Result<f64> {
        let m0 = self.m0();
        Ok(2.0 * self.eta * d6(self.t0)?
            + 4.0 * PI * m0 * d4(self.t0, 0.0)?
            + m0 * self.l0 / (2.0 * PI * self.t0))
    }

    fn j3(&self) -> Result<f64> {
        Ok((self.eta + 2.0 * PI * self.m0()) * d7(self.t0)?)
    }

    fn j4(&self) -> Result<f64> {
        Ok(self.eta * d4(self.t0, -1.0)? + 2.0 * PI * self.m0() * d4(self.t0, -2.0)?)
    }

    fn g1(&self, s4: f64) -> Result<f64> {
        let (t0, c1) = (self.t0, self.c1);
        let tpi = 2.0 * PI * t0;
        let e1 = 1.0 - 2.0 * s4 + 2.0 * c1;
        Ok(
            (1.0 / PI + 1.0 / tpi).powf(2.0 * s4 - 1.0) / self.um.powi(2)
                * (1.0 / PI + (0.5 + self.shift_a) / tpi).powf(2.0 * (1.0 - 2.0 * s4) + 4.0 * c1)
                * self.up_a.powi(4)
                * self.gamma1.powi(2)
                * (self.eta * d5(t0, 1.0 + e1)? / ((2.0 * PI).powi(2) * e1.powi(4))
                    + self.m0() * d5(t0, e1)? / (2.0 * PI * (2.0 * c1 - 2.0 * s4).powi(4))),
        )
    }

    fn g2(&self, s4: f64) -> Result<f64> {
        let (t0, c2) = (self.t0, self.c2);
        let tpi = 2.0 * PI * t0;
        Ok(
            (1.0 / PI + 1.0 / tpi).powf(2.0 * s4 - 1.0) / self.um.powi(2)
                * (1.0 / (2.0 * PI) - self.shift_b / tpi).powf(2.0 * (1.0 - 2.0 * (s4 + c2)))
                * self.up_b.powi(4)
                * self.gamma2.powi(2)
                * (self.eta * d4(t0, 2.0 * (1.0 - s4 - c2))? / (2.0 * PI).powi(2)
                    + self.m0() * d4(t0, 1.0 - 2.0 * (s4 + c2))? / (2.0 * PI)),
        )
    }

    fn g3(&self, s5: f64) -> Result<f64> {
        let (t0, c1) = (self.t0, self.c1);
        let tpi = 2.0 * PI * t0;
        let e1 = 1.0 - 2.0 * s5 + 2.0 * c1;
        Ok(1.0 / ((2.0 * PI).powf(1.0 + 2.0 * s5) * self.um.powi(2))
            * (1.0 / PI + (1.0 + self.shift_a) / tpi).powf(2.0 * (1.0 - 2.0 * s5) + 4.0 * c1)
            * self.up_a.powi(4)
            * self.gamma1.powi(2)
            * (self.eta * d5(t0, 1.0 + e1)? / e1.powi(4)
                + 2.0 * PI * self.m0() * d5(t0, e1)? / (2.0 * c1 - 2.0 * s5).powi(4)))
    }

    fn g4(&self, s5: f64) -> Result<f64> {
        let (t0, c2) = (self.t0, self.c2);
        let tpi = 2.0 * PI * t0;
        Ok(1.0 / ((2.0 * PI).powf(1.0 + 2.0 * s5) * self.um.powi(2))
            * (1.0 / (2.0 * PI) - self.shift_b / tpi).powf(2.0 * (1.0 - 2.0 * (s5 + c2)))
            * self.up_b.powi(4)
            * self.gamma2.powi(2)
            * (self.eta * d4(t0, 2.0 * (1.0 - s5 - c2))?
                + 2.0 * PI * self.m0() * d4(t0, 1.0 - 2.0 * (s5 + c2))?))
    }

    fn g5(&self, s4: f64) -> Result<f64> {
        let (t0, c1) = (self.t0, self.c1);
        let tpi = 2.0 * PI * t0;
        let shift = (0.5 + self.shift_a) / tpi;
        self.integrate(
            |s| {
                let e = 1.0 - 2.0 * (s - c1);
                let w = (1.0 + 1.0 / t0).powf(s - 0.5) * (1.0 / (2.0 * PI) + shift).powf(e)
                    + (1.0 + 0.5 / t0).powf(s - 0.5) * (1.0 / PI + shift).powf(e);
                Ok(w * d2(t0, 1.0 - s + c1)? / (s * (s - c1).powi(2)))
            },
            0.5,
            s4,
        )
    }

    fn g6(&self, s4: f64) -> Result<f64> {
        let (t0, c2) = (self.t0, self.c2);
        let shift = self.shift_b / (2.0 * PI * t0);
        self.integrate(
            |s| {
                let e = 1.0 - 2.0 * (s + c2);
                let w = (1.0 + 1.0 / t0).powf(s - 0.5) * (1.0 / (2.0 * PI) - shift).powf(e)
                    + (1.0 + 0.5 / t0).powf(s - 0.5) * (1.0 / PI - shift).powf(e);
                Ok(w / (s * (s + c2)))
            },
            0.5,
            s4,
        )
    }

    fn g7(&self, s5: f64) -> Result<f64> {
        let (t0, c1) = (self.t0, self.c1);
        let shift = (1.0 + self.shift_a) / (2.0 * PI * t0);
        self.integrate(
            |s| {
                let e = 1.0 - 2.0 * (s - c1);
                let w = (2.0 * PI).powf(1.0 - 2.0 * s) * (1.0 / (2.0 * PI) + shift).powf(e)
                    + PI.powf(1.0 - 2.0 * s) * (1.0 / PI + shift).powf(e);
                Ok(w * d2(t0, 1.0 - s + c1)? / ((1.0 - s) * (s - c1).powi(2)))
            },
            s5,
            0.5,
        )
    }

    fn g8(&self, s5: f64) -> Result<f64> {
        let (t0, c2) = (self.t0, self.c2);
        let shift = self.shift_b / (2.0 * PI * t0);
        self.integrate(
            |s| {
                let e = 1.0 - 2.0 * (s + c2);
                let w = (2.0 * PI).powf(1.0 - 2.0 * s) * (1.0 / (2.0 * PI) - shift).powf(e)
                    + PI.powf(1.0 - 2.0 * s) * (1.0 / PI - shift).powf(e);
                Ok(w / ((1.0 - s) * (s + c2)))
            },
            s5,
            0.5,
        )
    }

    fn small_g(&self, name: SmallG, sigma: f64) -> Result<f64> {
        match name {
            SmallG::G1 => self.g1(sigma),
            SmallG::G2 => self.g2(sigma),
            SmallG::G3 => self.g3(sigma),
            SmallG::G4 => self.g4(sigma),
            SmallG::G5 => self.g5(sigma),
            SmallG::G6 => self.g6(sigma),
            SmallG::G7 => self.g7(sigma),
            SmallG::G8 => self.g8(sigma),
        }
    }

    fn big_g1(&self, s2: f64, s3: f64) -> Result<f64> {
        let t0 = self.t0;
        let um2 = self.um.powi(2);
        let r7 = (self.eta + 2.0 * PI * self.m0()).sqrt() * d7(t0)?.sqrt();
        let right = (2.0 + 1.0 / t0).powf(s2 - 0.5) / um2
            * self.d4_pair(2.0 - 2.0 * s2)?.sqrt()
            * (r7 + self.d4_pair(2.0 * s2 - 2.0)?.sqrt());
        let left = (2.0 * PI).powf(1.0 - 2.0 * s3) / um2
            * self.d4_pair(2.0 * s3)?.sqrt()
            * (r7 + self.d4_pair(2.0 * s3 - 2.0)?.sqrt());
        Ok(right + left)
    }

    fn big_g2(&self, s2: f64, s3: f64) -> Result<f64> {
        let t0 = self.t0;
        let d3v = d3(t0)?;
        let inner = |u: f64| -> Result<f64> { Ok(d1(t0, u - 1.0)? / (2.0 - u) + d3v) };
        let right = self.integrate(
            |u| {
                Ok(
                    ((1.0 + 1.0 / t0).powf(u - 0.5) + (1.0 + 0.5 / t0).powf(u - 0.5)) * inner(u)?
                        / u,
                )
            },
            0.5,
            s2,
        )?;
        let left = self.integrate(
            |u| {
                Ok(
                    ((2.0 * PI).powf(1.0 - 2.0 * u) + PI.powf(1.0 - 2.0 * u)) * inner(u)?
                        / (1.0 - u),
                )
            },
            s3,
            0.5,
        )?;
        Ok(self.d1_zero / self.um.powi(2) * (right + left))
    }

    fn big_g3(&self, s4: f64) -> Result<f64> {
        let pair = self.eta / (2.0 * PI) * d4(self.t0, 2.0 * (1.0 - s4))?
            + self.m0() * d4(self.t0, 1.0 - 2.0 * s4)?;
        Ok((2.0 * PI).powf(s4) / self.um
            * pair.sqrt()
            * (self.g1(s4)?.sqrt() + self.g2(s4)?.sqrt()))
    }

    fn big_g4(&self, s5: f64) -> Result<f64> {
        Ok((2.0 * PI).powf(0.5 - s5) / self.um
            * self.d4_pair(2.0 * s5)?.sqrt()
            * (self.g3(s5)?.sqrt() + self.g4(s5)?.sqrt()))
    }

    fn big_g5(&self, s4: f64) -> Result<f64> {
        let ra = (self.up_a / self.um).powi(2);
        let rb = (self.up_b / self.um).powi(2);
        Ok(self.d1_zero / (2.0 * PI) * ra * self.g5(s4)? * self.gamma1
            + self.d1_zero * d1(self.t0, -0.5)? / (2.0 * PI) * rb * self.g6(s4)? * self.gamma2)
    }

    fn big_g6(&self, s5: f64) -> Result<f64> {
        let ra = (self.up_a / self.um).powi(2);
        Ok(self.d1_zero / (2.0 * PI) * ra * self.g7(s5)? * self.gamma1
            + (self.d1_zero * self.up_b / self.um).powi(2) / (2.0 * PI)
                * self.g8(s5)?
                * self.gamma2)
    }

    fn big_g(&self, name: BigG, sigma: &[f64; 5]) -> Result<f64> {
        let [_, s2, s3, s4, s5] = *sigma;
        match name {
            BigG::G1 => self.big_g1(s2, s3),
            BigG::G2 => self.big_g2(s2, s3),
            BigG::G3 => self.big_g3(s4),
            BigG::G4 => self.big_g4(s5),
            BigG::G5 => self.big_g5(s4),
            BigG::G6 => self.big_g6(s5),
        }
    }

    fn j01(&self, p: &MomentParams) -> Result<f64> {
        let (t0, c1) = (self.t0, self.c1);
        let c = &CONSTANTS;
        // Substituting u = 2v turns the e^{-u/2} weight into e^{-v}.
        let tail = integrate_exp_weighted(
            |v| 2.0 * (1.0 + v / t0).powf(2.0 * c1) * (2.0 * v).powf(-c1 - 0.5),
            2.0,
            &self.cfg,
        )?
        .value;
        let chi = c.chi_left_scale + c.chi_left_shift / (2.0 * t0 + self.shift_a).powf(c1);
        let a1 = p.shift_a.scale;
        Ok(2f64.powf(2.0 * c1)
            * (2.0 / PI).sqrt()
            * chi.powi(2)
            * (1.0 / (2.0 * a1 * a1 * self.l0.powf(2.0 * p.shift_a.power))).exp()
            * d2(t0, 0.5 + c1)?
            / (c1 - 0.5).powi(2)
            * tail)
    }

    fn j02(&self, p: &MomentParams) -> Result<f64> {
        let c2 = self.c2;
        let b1 = p.shift_b.scale;
        Ok(2.0 / E.powi(4)
            * (2.0 / PI).sqrt()
            * (CONSTANTS.chi_right_scale / (0.5 - c2)).powi(2)
            * (1.0 / (2.0 * b1 * b1 * self.l0.powf(2.0 * p.shift_b.power))).exp()
            * self.shift_b.powf(c2 - 0.5)
            * self.d1_zero
            / (0.5 + c2))
    }

    fn j0(&self, p: &MomentParams, j01: f64, j02: f64) -> f64 {
        let (t0, l0) = (self.t0, self.l0);
        // Powers of T0 with large negative exponents, taken in log space.
        let pa = ((1.0 - p.shift_a.scale * l0.powf(p.shift_a.power - 1.0)) * l0).exp();
        let pb = ((2.0 - p.shift_b.scale * l0.powf(p.shift_b.power - 1.0)) * l0).exp();
        let residue = CONSTANTS.j0_residue_coeff * (l0 - PI * t0 / 2.0).exp();
        3.5 * ((1.0 + 3.0 / 14.0 * j01) * j01 * pa + (1.0 + 3.0 / 14.0 * j02) * j02 * pb + residue)
    }

    fn j21(&self, s1: f64) -> Result<f64> {
        let main =
            2.0 * (2.0 * PI).powf(1.0 - 2.0 * s1) / self.um.powi(2) * self.d4_pair(2.0 * s1)?;
        let strip = self.integrate(
            |u| Ok(((2.0 * PI).powf(1.0 - 2.0 * u) + PI.powf(1.0 - 2.0 * u)) / (1.0 - u).powi(2)),
            s1,
            0.5,
        )?;
        Ok(main + 2.0 / self.l0 * (self.d1_zero / self.um).powi(2) * strip)
    }
}

/// `2 sum_{3<=n<m<=6} sqrt(J_n J_m)`.
fn mixed_sum(js: &[f64; 4]) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in i + 1..4 {
            s += (js[i] * js[j]).sqrt();
        }
    }
    2.0 * s
}

/// Constants that do not involve the line abscissae `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CoreConstants {
    pub eta: f64,
    pub u_minus: f64,
    pub j0: f64,
    pub j01: f64,
    pub j02: f64,
    pub j1: f64,
    pub j3: f64,
    pub j4: f64,
    pub j5: f64,
    pub j6: f64,
    pub f2: f64,
}

impl CoreConstants {
    /// `[J3, J4, J5, J6]`.
    pub fn j3_to_j6(&self) -> [f64; 4] {
        [self.j3, self.j4, self.j5, self.j6]
    }
}

/// Every constant of the error term for one parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentConstants {
    pub core: CoreConstants,
    pub j21: f64,
    pub j22: f64,
    pub small_g: [f64; 8],
    pub big_g: [f64; 6],
    pub f1: f64,
}

/// `J0, J1, J3..J6, F2` (no `sigma` needed).
pub fn core_constants(p: &MomentParams, cfg: &QuadratureConfig) -> Result<CoreConstants> {
    p.validate_without_sigma()?;
    let ctx = Context::new(p, cfg)?;
    let j01 = ctx.j01(p)?;
    let j02 = ctx.j02(p)?;
    let j0 = ctx.j0(p, j01, j02);
    let j1 = ctx.j1()?;
    let js = [ctx.j3()?, ctx.j4()?, ctx.g1(0.5)?, ctx.g2(0.5)?];
    let f2 = j0 + 2.0 * j1 + js.iter().sum::<f64>() + mixed_sum(&js);
    Ok(CoreConstants {
        eta: ctx.eta,
        u_minus: ctx.um,
        j0,
        j01,
        j02,
        j1,
        j3: js[0],
        j4: js[1],
        j5: js[2],
        j6: js[3],
        f2,
    })
}

/// All constants, including `J21`, `J22`, the `g`/`G` families and `F1`.
pub fn moment_constants(p: &MomentParams, cfg: &QuadratureConfig) -> Result<MomentConstants> {
    p.validate()?;
    let core = core_constants(p, cfg)?;
    let ctx = Context::new(p, cfg)?;
    let [s1, _, _, s4, s5] = p.sigma;
    let small_g = [
        ctx.g1(s4)?,
        ctx.g2(s4)?,
        ctx.g3(s5)?,
        ctx.g4(s5)?,
        ctx.g5(s4)?,
        ctx.g6(s4)?,
        ctx.g7(s5)?,
        ctx.g8(s5)?,
    ];
    let mut big_g = [0.0; 6];
    for (slot, name) in
        big_g
            .iter_mut()
            .zip([BigG::G1, BigG::G2, BigG::G3, BigG::G4, BigG::G5, BigG::G6])
    {
        *slot = ctx.big_g(name, &p.sigma)?;
    }
    let j21 = ctx.j21(s1)?;
    let j22 = big_g[0] + big_g[2] + big_g[3] + (big_g[1] + big_g[4] + big_g[5]) / ctx.l0;
    let js = core.j3_to_j6();
    let f1 = core.j0 + core.j1 + j21 + 2.0 * j22 + js.iter().sum::<f64>() + mixed_sum(&js);
    Ok(MomentConstants {
        core,
        j21,
        j22,
        small_g,
        big_g,
        f1,
    })
}

/// One named `J` constant (or `F1`, `F2`).
pub fn j_constant(name: JConstant, p: &MomentParams, cfg: &QuadratureConfig) -> Result<f64> {
    let needs_sigma = matches!(name, JConstant::J21 | JConstant::J22 | JConstant::F1);
    if needs_sigma {
        let m = moment_constants(p, cfg)?;
        return Ok(match name {
            JConstant::J21 => m.j21,
            JConstant::J22 => m.j22,
            _ => m.f1,
        });
    }
    let c = core_constants(p, cfg)?;
    Ok(match name {
        JConstant::J0 => c.j0,
        JConstant::J01 => c.j01,
        JConstant::J02 => c.j02,
        JConstant::J1 => c.j1,
        JConstant::J3 => c.j3,
        JConstant::J4 => c.j4,
        JConstant::J5 => c.j5,
        JConstant::J6 => c.j6,
        _ => c.f2,
    })
}

/// `g1..g8` at the abscissa `sigma` (playing `sigma4` for `g1, g2, g5, g6`
/// and `sigma5` for the others); `g1` and `g2` also accept `sigma = 1/2`.
pub fn g_constant(
    name: SmallG,
    p: &MomentParams,
    sigma: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    p.validate_without_sigma()?;
    let (c1, c2) = (p.c[0].abs(), p.c[1]);
    let ok = match name {
        SmallG::G1 | SmallG::G2 => sigma >= 0.5 && sigma < c1,
        SmallG::G5 | SmallG::G6 => sigma > 0.5 && sigma < c1,
        _ => sigma > 0.5 - c2 && sigma < 0.5,
    };
    if !ok {
        return domain(format!("sigma = {sigma} outside the range of {name:?}"));
    }
    Context::new(p, cfg)?.small_g(name, sigma)
}

/// `G1..G6` at the parameter set's own abscissae.
pub fn big_g_constant(name: BigG, p: &MomentParams, cfg: &QuadratureConfig) -> Result<f64> {
    p.validate()?;
    Context::new(p, cfg)?.big_g(name, &p.sigma)
}

/// Coefficient of `T log^{7/2}(T/2)` in the bound for `M2(T0, T)`:
/// `2 sum_{n=3}^{6} (J_n/pi^2 + 2 J1 J_n / log(T0/2))^{1/2} + F2 / log^{1/2}(T0/2)`.
pub fn half_power_coefficient(core: &CoreConstants, t0: f64) -> f64 {
    let lh = (t0 / 2.0).ln();
    let s: f64 = core
        .j3_to_j6()
        .iter()
        .map(|j| (j / (PI * PI) + 2.0 * core.j1 * j / lh).sqrt())
        .sum();
    2.0 * s + core.f2 / lh.sqrt()
}

impl MomentConstants {
    /// Every constant keyed by its conventional symbol.
    pub fn breakdown(&self, t0: f64) -> BTreeMap<String, f64> {
        let c = &self.core;
        let mut m = BTreeMap::new();
        let mut put = |k: &str, v: f64| {
            m.insert(k.to_string(), v);
        };
        put("eta", c.eta);
        put("U_minus", c.u_minus);
        put("J0", c.j0);
        put("J01", c.j01);
        put("J02", c.j02);
        put("J1", c.j1);
        put("J21", self.j21);
        put("J22", self.j22);
        put("J3", c.j3);
        put("J4", c.j4);
        put("J5", c.j5);
        put("J6", c.j6);
        for (i, v) in self.small_g.iter().enumerate() {
            put(&format!("g{}", i + 1), *v);
        }
        for (i, v) in self.big_g.iter().enumerate() {
            put(&format!("G{}", i + 1), *v);
        }
        put("F1", self.f1);
        put("F2", c.f2);
        put("C1", half_power_coefficient(c, t0));
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    fn close(got: f64, want: f64, rel: f64) {
        assert!((got - want).abs() <= rel * want.abs(), "{got} vs {want}");
    }

    // Reference values from a 30-digit mpmath transcription.
    #[test]
    fn half_power_set_matches_oracle() {
        let p = MomentParams::half_power_set();
        let c = core_constants(&p, &cfg()).unwrap();
        close(c.j1, 5.4494283149338, 1e-11);
        close(c.j3, 0.387365017555739, 1e-11);
        close(c.j4, 1.14171807335662, 1e-11);
        close(c.j5, 0.0634115019222137, 1e-9);
        close(c.j6, 4.75479666941678, 1e-9);
        close(c.j01, 0.0392424838564087, 1e-9);
        close(c.j02, 5.28896516747167, 1e-11);
        close(c.j0, 0.00465338775036091, 1e-9);
        close(c.f2, 27.9048215113909, 1e-9);
        close(half_power_coefficient(&c, p.t0), 20.7224601107782, 1e-9);
    }

    #[test]
    fn asymptotic_set_matches_oracle() {
        let p = MomentParams::asymptotic_set();
        let m = moment_constants(&p, &cfg()).unwrap();
        let c = m.core;
        close(c.j1, 4.04863647783645, 1e-11);
        close(c.j3, 0.240787493992671, 1e-11);
        close(c.j4, 0.705970673314554, 1e-11);
        close(c.j5, 0.0414704652507865, 1e-9);
        close(c.j6, 3.40859341395576, 1e-9);
        close(c.j01, 0.0328298270870587, 1e-9);
        close(c.j02, 5.63619356245566, 1e-11);
        close(c.j0, 4.67795457750871e-9, 1e-8);
        close(c.f2, 19.5270968488781, 1e-9);
        close(m.j21, 6.44560337933319, 1e-9);
        close(m.j22, 13.4381740253019, 1e-9);
        let big = [
            4.82909239575645,
            1.17814796984789,
            4.54563353031136,
            3.7648421630884,
            1.16157334829947,
            1.09810656809577,
        ];
        for (got, want) in m.big_g.iter().zip(big) {
            close(*got, want, 1e-9);
        }
        let small = [
            0.0856779223793073,
            5.18207054654308,
            0.0270474462895072,
            3.84926348166935,
            0.146508365209356,
            1.32884878337816,
            0.090575109437965,
            1.36875019888876,
        ];
        for (got, want) in m.small_g.iter().zip(small) {
            close(*got, want, 1e-9);
        }
        close(m.f1, 48.8004118009787, 1e-9);
    }

    #[test]
    fn published_coefficients_are_upper_bounds() {
        let c = core_constants(&MomentParams::half_power_set(), &cfg()).unwrap();
        assert!(half_power_coefficient(&c, 3000.0) <= CONSTANTS.fourth_moment_c1);
        let f1 = j_constant(JConstant::F1, &MomentParams::asymptotic_set(), &cfg()).unwrap();
        assert!(f1 <= CONSTANTS.fourth_moment_f1);
        assert!((f1 / CONSTANTS.fourth_moment_f1 - 1.0).abs() < 5e-3);
    }

    #[test]
    fn j5_and_j6_are_g1_and_g2_on_the_critical_line() {
        let p = MomentParams::asymptotic_set();
        let j5 = j_constant(JConstant::J5, &p, &cfg()).unwrap();
        let j6 = j_constant(JConstant::J6, &p, &cfg()).unwrap();
        assert_eq!(
            j5.to_bits(),
            g_constant(SmallG::G1, &p, 0.5, &cfg()).unwrap().to_bits()
        );
        assert_eq!(
            j6.to_bits(),
            g_constant(SmallG::G2, &p, 0.5, &cfg()).unwrap().to_bits()
        );
    }

    #[test]
    fn simple_substitutions() {
        let m0 = CONSTANTS.m0;
        assert_eq!(eta(3000.0).unwrap(), 1.0 + PI * m0 / 3000.0);
        assert_eq!(eta(55.0).unwrap(), 1.0 + PI * m0 / 55.0);
        assert!(eta(0.0).is_err());
        let p = MomentParams::half_power_set();
        let j3 = j_constant(JConstant::J3, &p, &cfg()).unwrap();
        let want = (eta(3000.0).unwrap() + 2.0 * PI * m0) * d7(3000.0).unwrap();
        assert_eq!(j3, want);
    }

    #[test]
    fn envelopes() {
        let lo = chi_envelope(2.0, Envelope::Lower).unwrap();
        let hi = chi_envelope(2.0, Envelope::Upper).unwrap();
        assert_eq!(lo, (-0.125f64).exp() / (1.0 + (-2.0 * PI).exp()));
        assert_eq!(hi, 0.125f64.exp() / (1.0 - (-2.0 * PI).exp()));
        assert!(lo < 1.0 && hi > 1.0);
        for y in [10.0, 100.0, 1e4] {
            let (l, u) = (
                chi_envelope(y, Envelope::Lower).unwrap(),
                chi_envelope(y, Envelope::Upper).unwrap(),
            );
            assert!(l * u <= 1.0 + 1e-3);
        }
        assert!((chi_envelope(1e9, Envelope::Upper).unwrap() - 1.0).abs() < 1e-15);
        assert!(chi_envelope(1.9, Envelope::Lower).is_err());
    }

    #[test]
    fn g_ranges_and_empty_intervals() {
        let p = MomentParams::asymptotic_set();
        assert_eq!(
            g_constant(SmallG::G5, &p, 0.5 + 1e-12, &cfg()).map(|v| v < 1e-9),
            Ok(true)
        );
        assert!(g_constant(SmallG::G5, &p, 0.5, &cfg()).is_err());
        assert!(g_constant(SmallG::G3, &p, 0.6, &cfg()).is_err());
        assert!(g_constant(SmallG::G1, &p, 0.95, &cfg()).is_err());
    }

    #[test]
    fn j0_vanishes_for_large_base() {
        let mut p = MomentParams::asymptotic_set();
        let mut last = f64::INFINITY;
        for t0 in [1e5, 1e6, 1e8] {
            p.t0 = t0;
            let j0 = j_constant(JConstant::J0, &p, &cfg()).unwrap();
            assert!(j0 < last);
            last = j0;
        }
        assert!(last < 1e-20);
    }

    #[test]
    fn breakdown_has_every_symbol() {
        let p = MomentParams::asymptotic_set();
        let b = moment_constants(&p, &cfg()).unwrap().breakdown(p.t0);
        for k in [
            "J0", "J01", "J02", "J1", "J21", "J22", "J3", "J4", "J5", "J6", "F1", "F2", "g1", "g8",
            "G1", "G6", "C1",
        ] {
            assert!(b[k].is_finite() && b[k] > 0.0, "{k}");
        }
    }
}
