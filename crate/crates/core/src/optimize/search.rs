//! Nelder–Mead and random multistart over a box with rejection of
//! infeasible points.

use super::rng::SplitMix64;
use crate::error::{domain, Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

type Objective = Box<dyn Fn(&[f64]) -> Result<f64> + Send + Sync>;
type Feasibility = Box<dyn Fn(&[f64]) -> bool + Send + Sync>;
type Breakdown = Box<dyn Fn(&[f64]) -> BTreeMap<String, f64> + Send + Sync>;

/// Sampling and stopping settings shared by every problem.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSettings {
    pub seed: u64,
    pub trials: usize,
    pub samples_per_trial: usize,
    pub polish: bool,
    /// Points evaluated before the random draws.
    pub starts: Vec<Vec<f64>>,
    pub max_evaluations: usize,
    /// Stop when every vertex lies within this sup-distance of the best one.
    pub simplex_tolerance: f64,
}

impl Default for SearchSettings {
    fn default() -> Self {
        SearchSettings {
            seed: 0,
            trials: 50,
            samples_per_trial: 100,
            polish: true,
            starts: Vec::new(),
            max_evaluations: 2000,
            simplex_tolerance: 1e-8,
        }
    }
}

/// A box-constrained minimisation problem.
pub struct OptimizationProblem {
    pub names: Vec<String>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    objective: Objective,
    feasible: Feasibility,
    breakdown: Option<Breakdown>,
    /// Points evaluated before the random draws.
    pub starts: Vec<Vec<f64>>,
    pub seed: u64,
    pub trials: usize,
    pub samples_per_trial: usize,
    pub polish: bool,
    pub max_evaluations: usize,
    /// Stop when every vertex lies within this sup-distance of the best one.
    pub simplex_tolerance: f64,
    evaluations: AtomicUsize,
}

impl OptimizationProblem {
    pub fn new(
        names: &[&str],
        lower: Vec<f64>,
        upper: Vec<f64>,
        objective: impl Fn(&[f64]) -> Result<f64> + Send + Sync + 'static,
        feasible: impl Fn(&[f64]) -> bool + Send + Sync + 'static,
    ) -> Result<Self> {
        let n = names.len();
        if lower.len() != n || upper.len() != n || n == 0 {
            return domain(format!("box needs {n} lower and upper bounds"));
        }
        if lower
            .iter()
            .zip(&upper)
            .any(|(l, u)| !(l < u && l.is_finite() && u.is_finite()))
        {
            return domain("box needs finite lo < hi in every coordinate");
        }
        let prob = OptimizationProblem {
            names: names.iter().map(|s| s.to_string()).collect(),
            lower,
            upper,
            objective: Box::new(objective),
            feasible: Box::new(feasible),
            breakdown: None,
            starts: Vec::new(),
            seed: 0,
            trials: 0,
            samples_per_trial: 0,
            polish: false,
            max_evaluations: 0,
            simplex_tolerance: 0.0,
            evaluations: AtomicUsize::new(0),
        };
        Ok(prob.with_settings(&SearchSettings::default()))
    }

    pub fn with_settings(mut self, s: &SearchSettings) -> Self {
        self.seed = s.seed;
        self.trials = s.trials;
        self.samples_per_trial = s.samples_per_trial;
        self.polish = s.polish;
        self.starts = s.starts.clone();
        self.max_evaluations = s.max_evaluations;
        self.simplex_tolerance = s.simplex_tolerance;
        self
    }

    pub fn with_breakdown(
        mut self,
        f: impl Fn(&[f64]) -> BTreeMap<String, f64> + Send + Sync + 'static,
    ) -> Self {
        self.breakdown = Some(Box::new(f));
        self
    }

    pub fn with_sampling(mut self, seed: u64, trials: usize, samples_per_trial: usize) -> Self {
        self.seed = seed;
        self.trials = trials;
        self.samples_per_trial = samples_per_trial;
        self
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn in_box(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(&self.lower)
                .zip(&self.upper)
                .all(|((v, l), u)| v >= l && v <= u)
    }

    /// Box membership and the derived constraints.
    pub fn is_feasible(&self, x: &[f64]) -> bool {
        self.in_box(x) && (self.feasible)(x)
    }

    /// Objective, `+inf` outside the feasible set or on evaluation failure.
    pub fn value(&self, x: &[f64]) -> f64 {
        self.evaluations.fetch_add(1, Ordering::Relaxed);
        if !self.is_feasible(x) {
            return f64::INFINITY;
        }
        match (self.objective)(x) {
            Ok(v) if v.is_finite() => v,
            _ => f64::INFINITY,
        }
    }

    fn evaluations(&self) -> usize {
        self.evaluations.load(Ordering::Relaxed)
    }

    fn finish(&self, best: Vec<f64>, trace: Vec<Option<f64>>) -> OptResult {
        let feasible = self.is_feasible(&best);
        let best_value = self.value(&best);
        let breakdown = match (&self.breakdown, feasible) {
            (Some(f), true) => f(&best),
            _ => BTreeMap::new(),
        };
        OptResult {
            parameters: self
                .names
                .iter()
                .cloned()
                .zip(best.iter().copied())
                .collect(),
            names: self.names.clone(),
            best_params: best,
            best_value,
            evaluations: self.evaluations(),
            feasible,
            trace,
            breakdown,
        }
    }
}

/// Outcome of a search; `best_value` is re-evaluated at `best_params`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptResult {
    pub names: Vec<String>,
    pub best_params: Vec<f64>,
    pub parameters: BTreeMap<String, f64>,
    pub best_value: f64,
    pub evaluations: usize,
    pub feasible: bool,
    /// Best value of each random trial, `None` when no draw was feasible.
    pub trace: Vec<Option<f64>>,
    pub breakdown: BTreeMap<String, f64>,
}

fn sup_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn affine(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

fn nelder_mead_core(prob: &OptimizationProblem, x0: &[f64]) -> (Vec<f64>, f64) {
    let n = prob.dim();
    let f0 = prob.value(x0);
    let mut simplex: Vec<(Vec<f64>, f64)> = vec![(x0.to_vec(), f0)];
    for i in 0..n {
        let step = 0.05 * (prob.upper[i] - prob.lower[i]);
        let mut x = x0.to_vec();
        x[i] = if x0[i] + step <= prob.upper[i] {
            x0[i] + step
        } else {
            x0[i] - step
        };
        let f = prob.value(&x);
        simplex.push((x, f));
    }
    let budget_start = prob.evaluations();
    loop {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| sup_distance(x, &simplex[0].0))
            .fold(0.0, f64::max);
        if diameter < prob.simplex_tolerance
            || prob.evaluations() - budget_start >= prob.max_evaluations
        {
            break;
        }
        let mut centroid = vec![0.0; n];
        for (x, _) in &simplex[..n] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v / n as f64;
            }
        }
        let (worst, fw) = simplex[n].clone();
        let reflected = affine(&centroid, &worst, -1.0);
        let fr = prob.value(&reflected);
        if fr < simplex[0].1 {
            let expanded = affine(&centroid, &worst, -2.0);
            let fe = prob.value(&expanded);
            simplex[n] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
            continue;
        }
        if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
            continue;
        }
        let (contracted, fc) = if fr < fw {
            let x = affine(&centroid, &worst, -0.5);
            let f = prob.value(&x);
            (x, f)
        } else {
            let x = affine(&centroid, &worst, 0.5);
            let f = prob.value(&x);
            (x, f)
        };
        if fc < fr.min(fw) {
            simplex[n] = (contracted, fc);
            continue;
        }
        let best = simplex[0].0.clone();
        for (x, f) in simplex.iter_mut().skip(1) {
            *x = affine(&best, x, 0.5);
            *f = prob.value(x);
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, f) = simplex.swap_remove(0);
    if f <= f0 {
        (x, f)
    } else {
        (x0.to_vec(), f0)
    }
}

/// Local minimisation from a feasible `x0`.
pub fn nelder_mead(prob: &OptimizationProblem, x0: &[f64]) -> Result<OptResult> {
    if !prob.is_feasible(x0) || !prob.value(x0).is_finite() {
        return Err(Error::InfeasibleStart);
    }
    let (best, _) = nelder_mead_core(prob, x0);
    Ok(prob.finish(best, Vec::new()))
}

fn draw(prob: &OptimizationProblem, rng: &mut SplitMix64) -> Vec<f64> {
    prob.lower
        .iter()
        .zip(&prob.upper)
        .map(|(l, u)| rng.uniform(*l, *u))
        .collect()
}

/// Best of `problem.starts` and `trials x samples_per_trial` uniform draws,
/// optionally polished by Nelder–Mead.
pub fn random_multistart(prob: &OptimizationProblem) -> Result<OptResult> {
    if prob.trials == 0 {
        return domain("need at least one trial");
    }
    let per_trial: Vec<Option<(Vec<f64>, f64)>> = (0..prob.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = SplitMix64::substream(prob.seed, trial as u64);
            let mut best: Option<(Vec<f64>, f64)> = None;
            for _ in 0..prob.samples_per_trial {
                let x = draw(prob, &mut rng);
                let f = prob.value(&x);
                if f.is_finite() && best.as_ref().is_none_or(|b| f < b.1) {
                    best = Some((x, f));
                }
            }
            best
        })
        .collect();
    let trace = per_trial
        .iter()
        .map(|b| b.as_ref().map(|(_, f)| *f))
        .collect();
    let mut best: Option<(Vec<f64>, f64)> = None;
    let candidates = prob
        .starts
        .iter()
        .map(|x| (x.clone(), prob.value(x)))
        .chain(per_trial.into_iter().flatten());
    for (x, f) in candidates {
        if f.is_finite() && best.as_ref().is_none_or(|b| f < b.1) {
            best = Some((x, f));
        }
    }
    let Some((mut x, _)) = best else {
        return Err(Error::NoFeasiblePoint {
            samples: prob.starts.len() + prob.trials * prob.samples_per_trial,
        });
    };
    if prob.polish {
        x = nelder_mead_core(prob, &x).0;
    }
    Ok(prob.finish(x, trace))
}
