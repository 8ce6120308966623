//! Adaptive Gauss–Kronrod quadrature on finite and exponentially weighted
//! semi-infinite ranges.

use crate::bracket::Bracket;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Abscissae of the 21-point Kronrod rule on `[-1, 1]` (non-negative half).
/// Odd indices are the 10-point Gauss nodes; the last entry is the centre.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

/// Weights of the 10-point Gauss rule, matching `XGK[1], XGK[3], ..., XGK[9]`.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Weights of the 21-point Kronrod rule.
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// How the semi-infinite range of `∫ e^{-u} g(u) du` is truncated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TailPolicy {
    /// First candidate cutoff, measured from the lower limit.
    pub start: f64,
    /// Increment between candidate cutoffs.
    pub step: f64,
    /// Width of the window on which `|g|` is sampled beyond a candidate.
    pub window: f64,
    /// Number of samples per window.
    pub samples: usize,
    /// Largest admissible cutoff, measured from the lower limit.
    pub max_extent: f64,
}

impl Default for TailPolicy {
    fn default() -> Self {
        TailPolicy {
            start: 20.0,
            step: 5.0,
            window: 5.0,
            samples: 16,
            max_extent: 800.0,
        }
    }
}

/// Tolerances and budgets shared by all integrators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail: TailPolicy,
    /// Largest upper limit accepted by [`moment_numeric`](super::moment_numeric).
    pub moment_ceiling: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-8,
            abs_tol: 1e-12,
            max_subdivisions: 4000,
            tail: TailPolicy::default(),
            moment_ceiling: 1e5,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0 && self.max_subdivisions >= 1) {
            return Err(Error::Domain(
                "quadrature tolerances must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }
}

/// Result of one 21-point rule application.
#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Segment {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err
            .total_cmp(&o.err)
            .then_with(|| o.a.total_cmp(&self.a))
    }
}

fn checked<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { at: x })
    }
}

/// One Gauss–Kronrod 21 application with the QUADPACK error heuristic.
fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Segment> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = checked(f, centre)?;
    let mut resk = fc * WGK[10];
    let mut resg = 0.0;
    let mut resabs = resk.abs();
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = checked(f, centre - dx)?;
        let f2 = checked(f, centre + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        resk += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            resg += WG[j / 2] * (f1 + f2);
        }
    }
    let reskh = resk * 0.5;
    let mut resasc = WGK[10] * (fc - reskh).abs();
    for j in 0..10 {
        resasc += WGK[j] * ((fv1[j] - reskh).abs() + (fv2[j] - reskh).abs());
    }
    let value = resk * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut err = ((resk - resg) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let round = 50.0 * f64::EPSILON * resabs;
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(round);
    }
    Ok(Segment { a, b, value, err })
}

/// Sum of segment values and errors in a fixed (left-to-right) order.
fn total(segs: &[Segment]) -> (f64, f64) {
    let mut sorted: Vec<&Segment> = segs.iter().collect();
    sorted.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut acc = super::KahanSum::default();
    let mut err = 0.0;
    for s in sorted {
        acc.add(s.value);
        err += s.err;
    }
    (acc.value(), err)
}

/// Adaptive integration over `[a, b]`, starting from the given interior
/// breakpoints.
pub fn integrate_with_breaks<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breaks: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Bracket> {
    cfg.validate()?;
    if !(a <= b) {
        return Err(Error::Domain(format!(
            "integration limits out of order: [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(Bracket::exact(0.0));
    }
    let mut points = vec![a];
    points.extend(breaks.iter().copied().filter(|&x| x > a && x < b));
    points.push(b);
    points.sort_by(f64::total_cmp);
    points.dedup();

    let mut heap = BinaryHeap::new();
    let mut done = Vec::new();
    for w in points.windows(2) {
        heap.push(gk21(&f, w[0], w[1])?);
    }
    let mut subdivisions = heap.len();
    loop {
        let (value, err) = {
            let mut all: Vec<Segment> = heap.iter().copied().collect();
            all.extend(done.iter().copied());
            total(&all)
        };
        let target = cfg.abs_tol.max(cfg.rel_tol * value.abs());
        if err <= target {
            return Ok(Bracket::new(value, err));
        }
        if subdivisions >= cfg.max_subdivisions {
            return Err(Error::BudgetExceeded {
                max: cfg.max_subdivisions,
                estimate: err,
                target,
            });
        }
        let worst: Segment = match heap.pop() {
            Some(s) => s,
            None => return Ok(Bracket::new(value, err)),
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Interval cannot be split further in double precision.
            done.push(worst);
            continue;
        }
        heap.push(gk21(&f, worst.a, mid)?);
        heap.push(gk21(&f, mid, worst.b)?);
        subdivisions += 1;
    }
}

/// `∫_a^b f(u) du` by adaptive Gauss–Kronrod 21 bisection.
pub fn integrate_finite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Bracket> {
    integrate_with_breaks(f, a, b, &[], cfg)
}

/// `∫_lower^∞ e^{-u} g(u) du` for `g` of at most polynomial growth.
///
/// The range is truncated at the first candidate `u*` with
/// `e^{-u*} max_{[u*, u*+w]} |g| < abs_tol / 10`; that product is added to the
/// reported error.
pub fn integrate_exp_weighted<F: Fn(f64) -> f64>(
    g: F,
    lower: f64,
    cfg: &QuadratureConfig,
) -> Result<Bracket> {
    cfg.validate()?;
    if !(lower >= 0.0) {
        return Err(Error::Domain(format!(
            "lower limit must be non-negative, got {lower}"
        )));
    }
    let pol = cfg.tail;
    let mut cut = lower + pol.start;
    let tail = loop {
        if cut > lower + pol.max_extent {
            return Err(Error::TailNotConvergent { reached: cut });
        }
        let mut peak: f64 = 0.0;
        for i in 0..=pol.samples {
            let u = cut + pol.window * i as f64 / pol.samples as f64;
            peak = peak.max(checked(&g, u)?.abs());
        }
        let bound = (-cut).exp() * peak;
        if bound < 0.1 * cfg.abs_tol {
            break bound;
        }
        cut += pol.step;
    };
    // Breakpoints at doubling distances keep the first bisections balanced.
    let mut breaks = Vec::new();
    let mut step = 0.5;
    while lower + step < cut {
        breaks.push(lower + step);
        step *= 2.0;
    }
    let inner_cfg = QuadratureConfig {
        abs_tol: 0.5 * cfg.abs_tol,
        ..*cfg
    };
    let body = integrate_with_breaks(|u| (-u).exp() * g(u), lower, cut, &breaks, &inner_cfg)?;
    Ok(body.widen(tail))
}

/// Fixed composite Gauss–Legendre (10-point) rule with `panels` equal panels.
///
/// Non-adaptive; used as an independent cross-check of the adaptive rule.
pub fn fixed_gauss<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut acc = super::KahanSum::default();
    for p in 0..panels {
        let c = a + (p as f64 + 0.5) * h;
        let half = 0.5 * h;
        for j in 0..5 {
            let dx = half * XGK[2 * j + 1];
            acc.add(half * WG[j] * (f(c - dx) + f(c + dx)));
        }
    }
    acc.value()
}
