//! Constants of the zero-density theorem: mollifier constants `C1..C6`,
//! the moment-transfer constants `K1..K3`, `L0..L2`, and `A1..A5`.

use super::params::ZdParams;
use crate::constants::{CONSTANTS, EULER_GAMMA};
use crate::error::{domain, Result};
use crate::moment4::a_constants;
use crate::numerics::{integrate_exp_weighted, QuadratureConfig};
use serde::Serialize;
use std::f64::consts::{LN_2, PI};

fn require_length(x0: f64) -> Result<()> {
    if !(x0 >= CONSTANTS.mollifier_min_x && x0.is_finite()) {
        return domain(format!("mollifier length must be at least 1e9, got {x0}"));
    }
    Ok(())
}

/// Coefficient of `T log X` in the mean square of the mollifier on the critical line.
pub fn const_c1(x0: f64) -> Result<f64> {
    require_length(x0)?;
    Ok(6.0 / (PI * PI) + CONSTANTS.b2 / x0.ln())
}

/// Coefficient of `X log X` in the same mean square.
pub fn const_c2(x0: f64) -> Result<f64> {
    require_length(x0)?;
    let (m0, c) = (CONSTANTS.m0, &CONSTANTS);
    let l = x0.ln();
    Ok(PI * m0 * c.b1 / l + 6.0 * m0 / (PI * x0) + PI * m0 * c.b2 / (x0 * l))
}

fn require_delta(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta.is_finite()) {
        return domain(format!("delta must be positive, got {delta}"));
    }
    Ok(())
}

/// Constant term in the mean square of `f_X` at `1 + delta/log X`.
pub fn const_c3(x0: f64, delta: f64) -> Result<f64> {
    require_length(x0)?;
    require_delta(delta)?;
    let l = x0.ln();
    Ok(PI * CONSTANTS.m0 * CONSTANTS.b4 / (2.0 * delta)
        * (1.0 + 2.0 * delta / l).powi(2)
        * (2.0 * delta * EULER_GAMMA / l).exp())
}

/// Coefficient of `(T + pi m0)/X` in the same mean square.
pub fn const_c4(x0: f64, delta: f64) -> Result<f64> {
    require_length(x0)?;
    require_delta(delta)?;
    let l = x0.ln();
    Ok(
        CONSTANTS.b4 / (5.0 * delta * delta.exp()) * (1.0 + delta / l).powi(2)
            + CONSTANTS.b3 * (-2.0 * delta).exp() / (l * l),
    )
}

/// `(E(u), log(1 - 9 E(u)^2 log^2 u / u))` with `E(u) = 1 + (2 + gamma + 7/(36u))/log u`.
fn mollifier_bound_log(u: f64) -> Result<(f64, f64)> {
    let l = u.ln();
    let e = 1.0 + (2.0 + EULER_GAMMA + 7.0 / (36.0 * u)) / l;
    let arg = 9.0 * e * e * l * l / u;
    if !(arg < 1.0) {
        return domain(format!("log(1 - {arg}) undefined at u = {u}"));
    }
    Ok((e, (-arg).ln_1p()))
}

/// Bound for `-int log|h_X(3/2 + it)| dt`, with `u = h T0`.
pub fn const_c5(u: f64, h: f64) -> Result<f64> {
    require_length(u)?;
    if !(h > 0.0 && h.is_finite()) {
        return domain(format!("h must be positive, got {h}"));
    }
    let (e, lg) = mollifier_bound_log(u)?;
    let l = u.ln();
    Ok(
        -lg * (3.0 / h + 8.0 * PI * CONSTANTS.m0) * (1.0 + CONSTANTS.c5_log_coeff / l)
            / (9.0 * e * e)
            * l,
    )
}

/// Constant of the argument-variation bound, with `u = h T0`.
pub fn const_c6(u: f64, h0: f64) -> Result<f64> {
    require_length(u)?;
    if !(h0 >= CONSTANTS.zd_min_h0) {
        return domain(format!("H0 must be at least 1002, got {h0}"));
    }
    let (_, lg) = mollifier_bound_log(u)?;
    let gap = ((2.5 / h0).powi(2) + (1.0 + 2.0 / h0).powi(2)).sqrt() / (2.0 * PI);
    Ok(
        CONSTANTS.c6_base + PI / LN_2 * u.powf(-1.5).ln_1p() + 4.0 / LN_2 * gap.ln()
            - 2.0 * PI / LN_2 * lg,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KConstant {
    K1,
    K2,
    K3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LConstant {
    L0,
    L1,
    L2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AConstant {
    A1,
    A2,
    A3,
    A4,
    A5,
}

fn k1(p: &ZdParams, cfg: &QuadratureConfig) -> Result<f64> {
    let x0 = p.h * p.t0;
    let (c1, c2) = (const_c1(x0)?, const_c2(x0)?);
    let (a1, a2) = a_constants(p.a0)?;
    let lt = p.t0.ln();
    let s = 3.0 / (4.0 * p.kappa);
    let g = |u: f64| {
        u.powf(1.0 / 6.0)
            * (1.0 + (s * u).ln_1p() / (2.0 * lt)).powf(4.0 / 3.0)
            * (c1 * (s * u).sqrt() + p.h * c2).powf(2.0 / 3.0)
    };
    let integral = integrate_exp_weighted(g, 0.0, cfg)?.value;
    let head = (2.0 * a2 * s.sqrt()).cbrt() * integral;
    let tail = (2.0 * a1).cbrt() * (p.h * c2 + p.a0 * c1 / p.t0).powf(2.0 / 3.0)
        / (p.t0.cbrt() * lt.powf(4.0 / 3.0));
    Ok(head + tail)
}

fn k2(p: &ZdParams, cfg: &QuadratureConfig) -> Result<f64> {
    let s = 3.0 / (4.0 * p.kappa);
    let integral = integrate_exp_weighted(f64::sqrt, 0.0, cfg)?.value;
    Ok(2f64.cbrt() * s.sqrt() * integral + 2f64.cbrt() / s * (p.a0 / p.t0).powi(3))
}

fn k3(p: &ZdParams, cfg: &QuadratureConfig) -> Result<f64> {
    let x0 = p.h * p.t0;
    let (c3, c4) = (const_c3(x0, p.delta)?, const_c4(x0, p.delta)?);
    let shift = PI * CONSTANTS.m0 / p.t0;
    let g = |u: f64| c3 + c4 / p.h * ((u / (2.0 * p.kappa)).sqrt() + shift);
    Ok(integrate_exp_weighted(g, 0.0, cfg)?.value)
}

/// `K1`, `K2` or `K3`.
pub fn const_k(name: KConstant, p: &ZdParams, cfg: &QuadratureConfig) -> Result<f64> {
    p.validate()?;
    match name {
        KConstant::K1 => k1(p, cfg),
        KConstant::K2 => k2(p, cfg),
        KConstant::K3 => k3(p, cfg),
    }
}

/// `L0`, `L1` or `L2` from `[K1, K2, K3]`.
pub fn const_l(name: LConstant, p: &ZdParams, k: [f64; 3]) -> Result<f64> {
    p.validate()?;
    if k.iter().any(|v| !(*v > 0.0 && v.is_finite())) {
        return domain(format!("K constants must be positive, got {k:?}"));
    }
    let [k1, k2, k3] = k;
    let lt = p.t0.ln();
    let lx = (p.h * p.t0).ln();
    let r = 3.0 * p.delta / lx;
    let common = 1f64.max(k3.powf(-r)) * (3.0 * p.delta * 1f64.max(lt / lx)).exp();
    Ok(match name {
        LConstant::L0 => {
            let q = (1.0 + 2.0 * p.delta / lx) / (4.0 * p.t0);
            (p.kappa * (1.0 + q * q)).exp() / (1.0 - 1.0 / p.h0)
        }
        LConstant::L1 => {
            let llt = lt.ln();
            1f64.max(k1.powf(r)) * common * (4.0 * p.delta * (llt / lx).max(llt / lt)).exp()
        }
        LConstant::L2 => 1f64.max(k2.powf(r)) * common,
    })
}

/// Every constant of the theorem for one parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZdConstants {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
    pub l0: f64,
    pub l1: f64,
    pub l2: f64,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub a5: f64,
}

impl ZdConstants {
    pub fn a(&self, name: AConstant) -> f64 {
        match name {
            AConstant::A1 => self.a1,
            AConstant::A2 => self.a2,
            AConstant::A3 => self.a3,
            AConstant::A4 => self.a4,
            AConstant::A5 => self.a5,
        }
    }

    /// Every constant keyed by its conventional symbol.
    pub fn breakdown(&self) -> Vec<(&'static str, f64)> {
        vec![
            ("C1", self.c1),
            ("C2", self.c2),
            ("C3", self.c3),
            ("C4", self.c4),
            ("C5", self.c5),
            ("C6", self.c6),
            ("K1", self.k1),
            ("K2", self.k2),
            ("K3", self.k3),
            ("L0", self.l0),
            ("L1", self.l1),
            ("L2", self.l2),
            ("A1", self.a1),
            ("A2", self.a2),
            ("A3", self.a3),
            ("A4", self.a4),
            ("A5", self.a5),
        ]
    }
}

/// Larger of `f(sigma1)` and `f(sigma2)`.
fn endpoint_max(p: &ZdParams, f: impl Fn(f64) -> f64) -> f64 {
    f(p.sigma1).max(f(p.sigma2))
}

/// `(3 - 2 sigma1)/(2d) + 1/log T0`, shared by `A3`, `A4`, `A5`.
fn strip_factor(p: &ZdParams) -> f64 {
    (3.0 - 2.0 * p.sigma1) / (2.0 * p.d) + 1.0 / p.t0.ln()
}

/// All constants of the theorem.
pub fn zd_constants(p: &ZdParams, cfg: &QuadratureConfig) -> Result<ZdConstants> {
    p.validate()?;
    let x0 = p.h * p.t0;
    let k = [k1(p, cfg)?, k2(p, cfg)?, k3(p, cfg)?];
    let [k1, k2, k3] = k;
    let l0 = const_l(LConstant::L0, p, k)?;
    let l1 = const_l(LConstant::L1, p, k)?;
    let l2 = const_l(LConstant::L2, p, k)?;
    let lt = p.t0.ln();
    let d = p.d;
    let shared = 1f64.max(l0.powf(-2.0 * d / lt))
        * 1f64.max(k3.powf(-3.0 * d / lt))
        * endpoint_max(p, |s| l0.powf(2.0 / (2.0 - s)))
        * endpoint_max(p, |s| k3.powf((2.0 * s - 1.0) / (2.0 - s)));
    let a1 = l1
        * (d * (3.0 + 4.0 * lt.ln() / lt)).exp()
        * 1f64.max(k1.powf(3.0 * d / lt))
        * shared
        * endpoint_max(p, |s| k1.powf(3.0 * (1.0 - s) / (2.0 - s)));
    let a2 = l2
        * (3.0 * d).exp()
        * 1f64.max(k2.powf(3.0 * d / lt))
        * shared
        * endpoint_max(p, |s| k2.powf(3.0 * (1.0 - s) / (2.0 - s)));
    let br = strip_factor(p);
    let c5 = const_c5(x0, p.h)?;
    let c6 = const_c6(x0, p.h0)?;
    Ok(ZdConstants {
        c1: const_c1(x0)?,
        c2: const_c2(x0)?,
        c3: const_c3(x0, p.delta)?,
        c4: const_c4(x0, p.delta)?,
        c5,
        c6,
        k1,
        k2,
        k3,
        l0,
        l1,
        l2,
        a1,
        a2,
        a3: br / (PI * LN_2),
        a4: 1.5 / LN_2 * br,
        a5: c6 / (2.0 * PI) * br + c5 / (2.0 * PI * d),
    })
}

/// One of `A1..A5`.
pub fn frak_a(name: AConstant, p: &ZdParams, cfg: &QuadratureConfig) -> Result<f64> {
    Ok(zd_constants(p, cfg)?.a(name))
}
