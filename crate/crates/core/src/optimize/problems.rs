//! The three tuning problems: the `T log^{7/2}` coefficient, the
//! asymptotic fourth-moment coefficient `F1` and the zero-density table rows.

use super::search::{random_multistart, OptResult, OptimizationProblem, SearchSettings};
use crate::constants::CONSTANTS;
use crate::error::Result;
use crate::moment4::{
    check_growth_conditions_for_all, core_constants, half_power_coefficient, moment_constants,
    CoreConstants, MomentParams, ShiftExponents,
};
use crate::numerics::QuadratureConfig;
use crate::zerodensity::{corollary1_coeffs, table1_row, zd_constants, ZdParams};
use std::collections::BTreeMap;

/// Free parameters of the half-power coefficient problem.
pub const C1_NAMES: [&str; 6] = ["c1", "c2", "frak_a1", "frak_a2", "frak_b1", "frak_b2"];
/// Free parameters of the `F1` problem.
pub const F1_NAMES: [&str; 11] = [
    "c1", "c2", "sigma1", "sigma2", "sigma3", "sigma4", "sigma5", "frak_a1", "frak_a2", "frak_b1",
    "frak_b2",
];
/// Free parameters of a table row problem.
pub const TABLE1_NAMES: [&str; 4] = ["d", "kappa", "delta", "log10_A0"];

const EPS: f64 = 1e-3;
const SHIFT_SCALE_MAX: f64 = 3.0;
const SHIFT_POWER_MAX: f64 = 2.5;

fn shift_box() -> (Vec<f64>, Vec<f64>) {
    (
        vec![EPS, 1.0 + EPS, EPS, 1.0 + EPS],
        vec![
            SHIFT_SCALE_MAX,
            SHIFT_POWER_MAX,
            SHIFT_SCALE_MAX,
            SHIFT_POWER_MAX,
        ],
    )
}

fn shifts(x: &[f64]) -> (ShiftExponents, ShiftExponents) {
    (
        ShiftExponents {
            scale: x[0],
            power: x[1],
        },
        ShiftExponents {
            scale: x[2],
            power: x[3],
        },
    )
}

/// Half-power parameters from `[c1, c2, a1, a2, b1, b2]`; the line abscissae
/// are those of the asymptotic set and do not enter the objective.
pub fn c1_params(x: &[f64]) -> MomentParams {
    let (shift_a, shift_b) = shifts(&x[2..6]);
    MomentParams {
        c: [x[0], x[1]],
        shift_a,
        shift_b,
        ..MomentParams::half_power_set()
    }
}

/// Asymptotic parameters from the eleven entries of [`F1_NAMES`].
pub fn f1_params(x: &[f64]) -> MomentParams {
    let (shift_a, shift_b) = shifts(&x[7..11]);
    MomentParams {
        t0: MomentParams::asymptotic_set().t0,
        c: [x[0], x[1]],
        sigma: [x[2], x[3], x[4], x[5], x[6]],
        shift_a,
        shift_b,
    }
}

fn moment_vector(p: &MomentParams, with_sigma: bool) -> Vec<f64> {
    let mut v = p.c.to_vec();
    if with_sigma {
        v.extend_from_slice(&p.sigma);
    }
    v.extend([
        p.shift_a.scale,
        p.shift_a.power,
        p.shift_b.scale,
        p.shift_b.power,
    ]);
    v
}

fn core_breakdown(c: &CoreConstants, t0: f64) -> BTreeMap<String, f64> {
    let pairs = [
        ("eta", c.eta),
        ("U_minus", c.u_minus),
        ("J0", c.j0),
        ("J01", c.j01),
        ("J02", c.j02),
        ("J1", c.j1),
        ("J3", c.j3),
        ("J4", c.j4),
        ("J5", c.j5),
        ("J6", c.j6),
        ("F2", c.f2),
        ("C1", half_power_coefficient(c, t0)),
    ];
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

/// Minimise the coefficient of `T log^{7/2}(T/2)` from `T0 = 3000`.
pub fn c1_problem(cfg: QuadratureConfig) -> Result<OptimizationProblem> {
    let (mut lower, mut upper) = (vec![-1.0 + EPS, EPS], vec![-0.5 - EPS, 0.5 - EPS]);
    let (sl, su) = shift_box();
    lower.extend(sl);
    upper.extend(su);
    let t0 = MomentParams::half_power_set().t0;
    let breakdown_cfg = cfg;
    let prob = OptimizationProblem::new(
        &C1_NAMES,
        lower,
        upper,
        move |x| {
            Ok(half_power_coefficient(
                &core_constants(&c1_params(x), &cfg)?,
                t0,
            ))
        },
        |x| {
            let p = c1_params(x);
            p.validate_without_sigma().is_ok() && check_growth_conditions_for_all(&p).holds
        },
    )?
    .with_breakdown(move |x| {
        core_constants(&c1_params(x), &breakdown_cfg)
            .map(|c| core_breakdown(&c, t0))
            .unwrap_or_default()
    });
    Ok(prob)
}

/// The published half-power parameter vector.
pub fn c1_published() -> Vec<f64> {
    moment_vector(&MomentParams::half_power_set(), false)
}

/// Minimise `F1` at `T0 = 1e5` over all eleven parameters.
pub fn f1_problem(cfg: QuadratureConfig) -> Result<OptimizationProblem> {
    let mut lower = vec![-1.0 + EPS, EPS, 0.0, 0.5 + EPS, 0.0, 0.5 + EPS, EPS];
    let mut upper = vec![
        -0.5 - EPS,
        0.5 - EPS,
        0.5 - EPS,
        1.0,
        0.5 - EPS,
        1.0 - EPS,
        0.5 - EPS,
    ];
    let (sl, su) = shift_box();
    lower.extend(sl);
    upper.extend(su);
    let t0 = MomentParams::asymptotic_set().t0;
    let breakdown_cfg = cfg;
    let prob = OptimizationProblem::new(
        &F1_NAMES,
        lower,
        upper,
        move |x| Ok(moment_constants(&f1_params(x), &cfg)?.f1),
        |x| {
            let p = f1_params(x);
            p.validate().is_ok() && check_growth_conditions_for_all(&p).holds
        },
    )?
    .with_breakdown(move |x| {
        moment_constants(&f1_params(x), &breakdown_cfg)
            .map(|m| m.breakdown(t0))
            .unwrap_or_default()
    });
    Ok(prob)
}

/// The published asymptotic parameter vector.
pub fn f1_published() -> Vec<f64> {
    moment_vector(&MomentParams::asymptotic_set(), true)
}

/// Sampling box of a table row problem; the decision variables are
/// `d in (0, 0.89]`, `kappa > 0`, `delta > 0`, `A0 >= 1e5`, sampled over a
/// bounded sub-box.
pub const TABLE1_BOX: ([f64; 4], [f64; 4]) = ([0.01, 0.01, 1e-3, 5.0], [0.89, 1.0, 1.0, 13.0]);

fn row_params(sigma: (f64, f64), x: &[f64]) -> ZdParams {
    ZdParams::pinned(sigma.0, sigma.1, x[0], x[1], x[2], 10f64.powf(x[3]))
}

/// Minimise `B1` on the `sigma` interval of table row `index`.
pub fn table1_problem(index: usize, cfg: QuadratureConfig) -> Result<OptimizationProblem> {
    let row = table1_row(index)?;
    let sigma = (row.sigma1, row.sigma2);
    let breakdown_cfg = cfg;
    let prob = OptimizationProblem::new(
        &TABLE1_NAMES,
        TABLE1_BOX.0.to_vec(),
        TABLE1_BOX.1.to_vec(),
        move |x| {
            let p = row_params(sigma, x);
            Ok(corollary1_coeffs(&p, &zd_constants(&p, &cfg)?)?.b1)
        },
        move |x| {
            let p = row_params(sigma, x);
            p.validate_pinned().is_ok() && x[0] <= CONSTANTS.corollary_max_d
        },
    )?
    .with_breakdown(move |x| {
        let p = row_params(sigma, x);
        let Ok(z) = zd_constants(&p, &breakdown_cfg) else {
            return BTreeMap::new();
        };
        let mut m: BTreeMap<String, f64> = z
            .breakdown()
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect();
        if let Ok(b) = corollary1_coeffs(&p, &z) {
            m.insert("B1".into(), b.b1);
            m.insert("B2".into(), b.b2);
            m.insert("B3".into(), b.b3);
        }
        m
    });
    Ok(prob)
}

/// The published `[d, kappa, delta, log10 A0]` of row `index`.
pub fn table1_published(index: usize) -> Result<Vec<f64>> {
    let r = table1_row(index)?;
    Ok(vec![r.d, r.kappa, r.delta, r.log10_a0])
}

/// Multistart search for row `index` under `settings`.
pub fn optimize_table1(
    index: usize,
    settings: &SearchSettings,
    cfg: QuadratureConfig,
) -> Result<OptResult> {
    random_multistart(&table1_problem(index, cfg)?.with_settings(settings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::nelder_mead;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn published_points_are_feasible() {
        let c1 = c1_problem(cfg()).unwrap();
        assert!(c1.is_feasible(&c1_published()));
        let f1 = f1_problem(cfg()).unwrap();
        assert!(f1.is_feasible(&f1_published()));
        for i in 1..=16 {
            let t = table1_problem(i, cfg()).unwrap();
            assert!(t.is_feasible(&table1_published(i).unwrap()), "row {i}");
        }
    }

    #[test]
    fn c1_polish_from_published() {
        let prob = c1_problem(cfg()).unwrap();
        let x0 = c1_published();
        let start = prob.value(&x0);
        assert!((start - 20.7224601107782).abs() < 1e-9);
        let r = nelder_mead(&prob, &x0).unwrap();
        assert!(r.feasible && r.best_value <= start);
        assert!(
            r.best_value <= CONSTANTS.fourth_moment_c1 + 1e-4,
            "{}",
            r.best_value
        );
        assert_eq!(r.breakdown["C1"], r.best_value);
    }

    #[test]
    fn table_rows_from_published() {
        for (i, cap) in [(1, 5.361), (16, 46.93)] {
            let mut prob = table1_problem(i, cfg()).unwrap();
            prob.max_evaluations = 300;
            let r = nelder_mead(&prob, &table1_published(i).unwrap()).unwrap();
            assert!(
                r.feasible && r.best_value <= cap,
                "row {i}: {}",
                r.best_value
            );
            assert_eq!(r.breakdown["B1"], r.best_value);
        }
    }

    #[test]
    fn infeasible_table_point() {
        let prob = table1_problem(1, cfg()).unwrap();
        assert!(!prob.is_feasible(&[0.95, 0.3, 0.01, 10.0]));
        assert_eq!(prob.value(&[0.2, 0.3, 0.01, 4.0]), f64::INFINITY);
    }
}
