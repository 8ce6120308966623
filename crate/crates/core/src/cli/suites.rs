//! Report streams behind `verify`: each suite turns a family of lemma checks
//! into [`VerificationReport`]s, deterministically for a fixed seed.

use crate::bracket::Bracket;
use crate::constants::CONSTANTS;
use crate::divisor::{
    cache_path_from_env, mean_square_numeric, mean_value_bracket, verify_divisor_suite,
    DivisorTable,
};
use crate::error::{domain, Result};
use crate::moment4::{
    check_growth_conditions, chi_envelope, core_constants, corollary2_bounds, dyadic_bounds,
    half_power_coefficient, moment_constants, theorem2_interval, Envelope, MomentParams,
};
use crate::numerics::{abs_chi, ln_abs_gamma_scaled, moment_numeric, QuadratureConfig};
use crate::optimize::SplitMix64;
use crate::report::VerificationReport;
use crate::zerodensity::{compare_all, TABLE1_TOLERANCE};
use clap::ValueEnum;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Named groups of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Divisor-sum lemmas against a sieve, up to `x = 1e6`
    Divisor,
    /// Gamma and chi brackets and envelopes
    GammaChi,
    /// Mean-value bracket of random Dirichlet polynomials
    Meanvalue,
    /// Moment coefficients and containment of `M2` quadrature in the bounds
    Moments,
    /// Table coefficients within tolerance
    Table1,
    /// Every suite above, in order
    All,
}

/// Sieve size for the divisor suite.
pub const DIVISOR_SIEVE: u64 = 10_000_000;
/// Largest `x` checked by the divisor suite.
pub const DIVISOR_X_MAX: f64 = 1.0e6;
/// Acceptance band for the half-power coefficient at the published parameters.
pub const C1_BAND: (f64, f64) = (20.70, 20.7226);
/// Acceptance band for `F1` at the published parameters.
pub const F1_BAND: (f64, f64) = (48.3, 48.801 * (1.0 + 5e-3));
/// Heights at which the fourth-moment bounds are checked against quadrature.
pub const CONTAINMENT_HEIGHTS: [f64; 3] = [3000.0, 6000.0, 1.0e4];

/// Sampling sizes and seed shared by the suites.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteOptions {
    /// Grid points per divisor lemma.
    pub divisor_points: usize,
    /// Sample points per gamma/chi inequality.
    pub gamma_samples: usize,
    /// Unit-modulus checks of `chi` on the critical line.
    pub chi_unit_samples: usize,
    /// Random Dirichlet polynomials.
    pub mean_value_samples: usize,
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            divisor_points: 200,
            gamma_samples: 100,
            chi_unit_samples: 20,
            mean_value_samples: 50,
            seed: 0,
        }
    }
}

impl SuiteOptions {
    /// The same `samples` for every sampled suite.
    pub fn with_samples(samples: usize, seed: u64) -> Self {
        SuiteOptions {
            divisor_points: samples,
            gamma_samples: samples,
            chi_unit_samples: samples.min(20),
            mean_value_samples: samples.min(50),
            seed,
        }
    }
}

/// Reports of `suite`, in a fixed order.
pub fn run_suite(
    suite: Suite,
    opts: &SuiteOptions,
    cfg: &QuadratureConfig,
) -> Result<Vec<VerificationReport>> {
    Ok(match suite {
        Suite::Divisor => divisor_suite(opts.divisor_points)?,
        Suite::GammaChi => gamma_chi_suite(opts.gamma_samples, opts.chi_unit_samples, opts.seed)?,
        Suite::Meanvalue => mean_value_suite(opts.mean_value_samples, opts.seed, cfg)?,
        Suite::Moments => moments_suite(cfg)?,
        Suite::Table1 => table1_suite(cfg)?,
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Divisor,
                Suite::GammaChi,
                Suite::Meanvalue,
                Suite::Moments,
                Suite::Table1,
            ] {
                out.extend(run_suite(s, opts, cfg)?);
            }
            out
        }
    })
}

/// Every divisor lemma on a `points`-point grid up to `x = 1e6`.
pub fn divisor_suite(points: usize) -> Result<Vec<VerificationReport>> {
    let cache = cache_path_from_env();
    let table = DivisorTable::load_or_build(DIVISOR_SIEVE, cache.as_deref())?;
    verify_divisor_suite(&table, DIVISOR_X_MAX, points)
}

/// Sample of `suite`'s stream `index`: draws of `(x, y)` per inequality.
fn stream(seed: u64, suite: u64, index: usize) -> SplitMix64 {
    SplitMix64::substream(seed ^ crate::optimize::mix(suite), index as u64)
}

fn log_uniform(rng: &mut SplitMix64, lo: f64, hi: f64) -> f64 {
    rng.uniform(lo.ln(), hi.ln()).exp()
}

fn signed(rng: &mut SplitMix64, v: f64) -> f64 {
    if rng.next_u64() & 1 == 0 {
        v
    } else {
        -v
    }
}

/// Gamma and chi brackets at `|y| >= 2`, the two uniform envelopes of chi and
/// `|chi(1/2 + it)| = 1`.
pub fn gamma_chi_suite(
    samples: usize,
    unit_samples: usize,
    seed: u64,
) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    let half_ln_2pi = 0.5 * (2.0 * PI).ln();
    for i in 0..samples {
        let mut rng = stream(seed, 1, i);
        let x = rng.uniform(-1.0, 1.0);
        let y0 = log_uniform(&mut rng, 2.0, 1.0e4);
        let y = signed(&mut rng, y0);
        let inputs = [("x", x), ("y", y), ("y0", y0)];
        let ln_mod = 0.5 * (x * x + y * y).ln();
        let ln_ratio = ln_abs_gamma_scaled(x, y)? - half_ln_2pi - (x - 0.5) * ln_mod;
        let slack = 1e-12;
        let bound = 1.0 / (2.0 * y0 * y0);
        out.push(VerificationReport::upper(
            "gamma_lower",
            &inputs,
            (-bound).exp(),
            (ln_ratio - slack).exp(),
        ));
        out.push(VerificationReport::upper(
            "gamma_upper",
            &inputs,
            (ln_ratio + slack).exp(),
            bound.exp(),
        ));
        let chi = abs_chi(x, y)?;
        let scale = ((x - 0.5) * (ln_mod - (2.0 * PI).ln())).exp();
        out.push(VerificationReport::upper(
            "chi_lower",
            &inputs,
            chi_envelope(y0, Envelope::Lower)?,
            scale * chi.lo(),
        ));
        out.push(VerificationReport::upper(
            "chi_upper",
            &inputs,
            scale * chi.hi(),
            chi_envelope(y0, Envelope::Upper)?,
        ));
    }
    let c = &CONSTANTS;
    for i in 0..samples {
        let mut rng = stream(seed, 2, i);
        let x = rng.uniform(-0.5, 0.0);
        let mag = log_uniform(&mut rng, 1e-2, 1e6);
        let y = signed(&mut rng, mag);
        let rhs = c.chi_left_scale * y.abs().powf(0.5 - x) + c.chi_left_shift;
        out.push(VerificationReport::upper(
            "chi_left_envelope",
            &[("x", x), ("y", y)],
            abs_chi(x, y)?.hi(),
            rhs,
        ));
    }
    for i in 0..samples {
        let mut rng = stream(seed, 3, i);
        let x = rng.uniform(0.5, 0.999);
        let mag = log_uniform(&mut rng, 1e-3, 1e6);
        let y = signed(&mut rng, mag);
        let rhs = c.chi_right_scale / (1.0 - x);
        out.push(VerificationReport::upper(
            "chi_right_envelope",
            &[("x", x), ("y", y)],
            abs_chi(x, y)?.hi(),
            rhs,
        ));
    }
    for i in 0..unit_samples {
        let mut rng = stream(seed, 4, i);
        let t = log_uniform(&mut rng, 2.0, 1.0e6);
        let v = abs_chi(0.5, t)?.value;
        out.push(VerificationReport::upper(
            "chi_unit_modulus",
            &[("t", t)],
            (v - 1.0).abs(),
            1e-9,
        ));
    }
    Ok(out)
}

/// Random Dirichlet polynomial number `index`: length up to 100, complex
/// coefficients with random decay, on a random segment.
pub fn random_polynomial(seed: u64, index: usize) -> (Vec<(u64, Complex64)>, f64, f64) {
    let mut rng = stream(seed, 5, index);
    let len = 1 + (rng.next_f64() * 100.0) as u64;
    let decay = rng.uniform(0.0, 1.0);
    let coeffs = (1..=len)
        .map(|n| {
            let a = Complex64::new(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
            (n, a * (n as f64).powf(-decay))
        })
        .collect();
    let t1 = log_uniform(&mut rng, 1.0, 100.0);
    let t2 = t1 + log_uniform(&mut rng, 1.0, 300.0);
    (coeffs, t1, t2)
}

/// Quadrature of `int |sum a_n n^{it}|^2` against the mean-value bracket for
/// `samples` random polynomials.
pub fn mean_value_suite(
    samples: usize,
    seed: u64,
    cfg: &QuadratureConfig,
) -> Result<Vec<VerificationReport>> {
    (0..samples)
        .into_par_iter()
        .map(|i| {
            let (coeffs, t1, t2) = random_polynomial(seed, i);
            let bracket = mean_value_bracket(&coeffs, t1, t2)?;
            let numeric = mean_square_numeric(&coeffs, t1, t2, cfg)?;
            let lhs = (numeric.value - bracket.value).abs() + numeric.abs_err;
            let inputs = [
                ("index", i as f64),
                ("terms", coeffs.len() as f64),
                ("T1", t1),
                ("T2", t2),
            ];
            Ok(VerificationReport::upper(
                "mean_value",
                &inputs,
                lhs,
                bracket.abs_err,
            ))
        })
        .collect()
}

fn inside(
    check: &str,
    inputs: &[(&str, f64)],
    inner: Bracket,
    outer: [f64; 2],
) -> [VerificationReport; 2] {
    [
        VerificationReport::upper(format!("{check}_lower"), inputs, outer[0], inner.lo()),
        VerificationReport::upper(format!("{check}_upper"), inputs, inner.hi(), outer[1]),
    ]
}

/// `M2` on consecutive segments between `points`, by quadrature.
fn segment_moments(points: &[f64], cfg: &QuadratureConfig) -> Result<Vec<Bracket>> {
    points
        .windows(2)
        .map(|w| moment_numeric(2.0, w[0], w[1], cfg))
        .collect()
}

/// Published constants and moment values, and containment of quadrature
/// values of `M2` in every bound valid at the heights checked.
pub fn moments_suite(cfg: &QuadratureConfig) -> Result<Vec<VerificationReport>> {
    let c = &CONSTANTS;
    let mut out = Vec::new();
    let hp = MomentParams::half_power_set();
    let core = core_constants(&hp, cfg)?;
    let c1 = half_power_coefficient(&core, hp.t0);
    out.extend(inside(
        "half_power_coefficient",
        &[("T0", hp.t0)],
        Bracket::exact(c1),
        [C1_BAND.0, C1_BAND.1],
    ));
    let asym = MomentParams::asymptotic_set();
    let f1 = moment_constants(&asym, cfg)?.f1;
    out.extend(inside(
        "f1_coefficient",
        &[("T0", asym.t0)],
        Bracket::exact(f1),
        [F1_BAND.0, F1_BAND.1],
    ));

    let points = [0.0, 3000.0, 6000.0, 1.0e4, 1.2e4, 2.0e4];
    let seg = segment_moments(&points, cfg)?;
    let between = |a: f64, b: f64| -> Bracket {
        let (i, j) = (
            points.iter().position(|&p| p == a).unwrap(),
            points.iter().position(|&p| p == b).unwrap(),
        );
        seg[i..j]
            .iter()
            .fold(Bracket::exact(0.0), |acc, s| acc + *s)
    };
    out.extend(inside(
        "moment_0_3000",
        &[("A", 0.0), ("B", 3000.0)],
        between(0.0, 3000.0),
        c.moment_0_3000,
    ));
    out.extend(inside(
        "moment_3000_6000",
        &[("A", 3000.0), ("B", 6000.0)],
        between(3000.0, 6000.0),
        c.moment_3000_6000,
    ));

    let m = moment_constants(&hp, cfg)?;
    let seed = between(hp.t0, 2.0 * hp.t0);
    for t in CONTAINMENT_HEIGHTS {
        let inputs = [("T", t), ("T0", hp.t0)];
        out.push(check_growth_conditions(&hp, t));
        let full = between(0.0, t);
        let fb = corollary2_bounds(t)?;
        out.push(VerificationReport::upper(
            "half_power_upper",
            &inputs,
            full.hi(),
            fb.upper_half_power,
        ));
        if let (Some(up), Some(lo)) = (fb.upper_asymptotic, fb.lower_asymptotic) {
            out.push(VerificationReport::upper(
                "asymptotic_upper",
                &inputs,
                full.hi(),
                up,
            ));
            out.push(VerificationReport::upper(
                "asymptotic_lower",
                &inputs,
                lo,
                full.lo(),
            ));
        }
        let from_t0 = between(hp.t0, t);
        let d = dyadic_bounds(t, &hp, &m, seed)?;
        out.push(VerificationReport::upper(
            "dyadic_upper",
            &inputs,
            from_t0.hi(),
            d.upper,
        ));
        out.push(VerificationReport::upper(
            "dyadic_upper_large",
            &inputs,
            from_t0.hi(),
            d.upper_large,
        ));
        out.push(VerificationReport::upper(
            "dyadic_lower",
            &inputs,
            d.lower,
            from_t0.lo(),
        ));
        let octave = between(t, 2.0 * t);
        let o = theorem2_interval(t, &hp, &m)?;
        out.extend(inside(
            "octave_interval",
            &inputs,
            octave,
            [o.interval.lo(), o.interval.hi()],
        ));
        out.push(VerificationReport::upper(
            "octave_upper",
            &inputs,
            octave.hi(),
            o.upper,
        ));
    }
    Ok(out)
}

/// Recomputed coefficients of every table row against the tabulated ones.
pub fn table1_suite(cfg: &QuadratureConfig) -> Result<Vec<VerificationReport>> {
    let rows = compare_all(cfg)?;
    if rows.is_empty() {
        return domain("empty table");
    }
    Ok(rows
        .iter()
        .map(|r| {
            let worst = r.deviation.iter().fold(0.0f64, |a, d| a.max(d.abs()));
            let inputs = [
                ("row", r.index as f64),
                ("B1", r.recomputed.b1),
                ("B2", r.recomputed.b2),
                ("B3", r.recomputed.b3),
            ];
            VerificationReport::upper("table1_row", &inputs, worst, TABLE1_TOLERANCE)
        })
        .collect())
}
