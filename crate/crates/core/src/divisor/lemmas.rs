//! Brute-force checks of the weighted divisor-sum bounds.

use super::bounds::{d1, d2, d3, d4, d5, d6, d7};
use super::sums::{range_sum, weighted_divisor_sum, Side, Weight};
use super::table::DivisorTable;
use crate::constants::{CONSTANTS, EULER_GAMMA};
use crate::error::{domain, Error, Result};
use crate::report::VerificationReport;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// The divisor-sum inequalities that can be checked against the sieve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DivisorLemma {
    /// `sum_{n<=x} d(n) n^{-s} <= D1(x0, s0)/(1-s) x^{1-s} log x`, `s <= 1/2`, with `s0 = min(s, 0)`.
    DivisorHead,
    /// `sum_{n>x} d(n) n^{-s} <= D2(x0, s)/(s-1)^2 x^{1-s} log x`, `s > 1`.
    DivisorTail,
    /// `sum_{n<=x} d(n) n^{-s} (1-e^{-n/x}) <= D1(x0, s-1)/(2-s) x^{1-s} log x`, `s in [0,1]`.
    DivisorExpHead,
    /// `sum_{n>x} d(n) n^{-s} e^{-n/x} <= D3(x0) x^{1-s} log x`, `s in [0,1]`.
    DivisorExpTail,
    /// `sum_{n<=x} d(n)^2 n^{-s} <= D4(x0, s) x^{1-s} log^3 x`, `s in [-3,1)`.
    SquareHead,
    /// `sum_{n>x} d(n)^2 n^{-s} <= D5(x0, s)/(s-1)^4 x^{1-s} log^3 x`, `s > 1`.
    SquareTail,
    /// `|sum_{n<=x} d(n)^2/n - log^4 x/(4 pi^2)| <= D6(x0) log^3 x`.
    SquareLogMean,
    /// `sum_{n>x} d(n)^2 n^{-s} e^{-2n/x} <= D7(x0) x^{1-s} log^3 x`, `s >= -1`, `x0 >= e^4`.
    SquareExpTail,
    /// `sum_{n<=x} d(n)^2 n^{-s} (e^{-n/x}-1)^2 <= D4(x0, s-2) x^{1-s} log^3 x`, `s in [-1,2]`.
    SquareExpHead,
    /// `|sum_{n<=x} d(n)^2 - x P(log x)| <= 9.73 x^{3/4} log x`.
    SquareSummatory,
}

impl DivisorLemma {
    pub const ALL: [DivisorLemma; 10] = [
        DivisorLemma::DivisorHead,
        DivisorLemma::DivisorTail,
        DivisorLemma::DivisorExpHead,
        DivisorLemma::DivisorExpTail,
        DivisorLemma::SquareHead,
        DivisorLemma::SquareTail,
        DivisorLemma::SquareLogMean,
        DivisorLemma::SquareExpTail,
        DivisorLemma::SquareExpHead,
        DivisorLemma::SquareSummatory,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DivisorLemma::DivisorHead => "divisor_head",
            DivisorLemma::DivisorTail => "divisor_tail",
            DivisorLemma::DivisorExpHead => "divisor_exp_head",
            DivisorLemma::DivisorExpTail => "divisor_exp_tail",
            DivisorLemma::SquareHead => "square_head",
            DivisorLemma::SquareTail => "square_tail",
            DivisorLemma::SquareLogMean => "square_log_mean",
            DivisorLemma::SquareExpTail => "square_exp_tail",
            DivisorLemma::SquareExpHead => "square_exp_head",
            DivisorLemma::SquareSummatory => "square_summatory",
        }
    }

    /// Closed range of `sigma` sampled by [`lemma_grid`]; `None` when the
    /// bound has no `sigma`.
    pub fn sigma_range(self) -> Option<(f64, f64)> {
        match self {
            DivisorLemma::DivisorHead => Some((-3.0, 0.5)),
            DivisorLemma::DivisorTail | DivisorLemma::SquareTail => Some((1.01, 3.0)),
            DivisorLemma::DivisorExpHead | DivisorLemma::DivisorExpTail => Some((0.0, 1.0)),
            DivisorLemma::SquareHead => Some((-3.0, 0.99)),
            DivisorLemma::SquareExpTail => Some((-1.0, 3.0)),
            DivisorLemma::SquareExpHead => Some((-1.0, 2.0)),
            DivisorLemma::SquareLogMean | DivisorLemma::SquareSummatory => None,
        }
    }

    fn min_x0(self) -> f64 {
        if self == DivisorLemma::SquareExpTail {
            4f64.exp()
        } else {
            2.0
        }
    }

    /// Largest `x` that a table of size `limit` can check.
    pub fn max_x(self, limit: u64) -> f64 {
        let n = limit as f64;
        match self {
            DivisorLemma::DivisorExpTail | DivisorLemma::SquareExpTail => n / 40.0,
            DivisorLemma::DivisorTail | DivisorLemma::SquareTail => n / TAIL_SPLIT,
            _ => n,
        }
    }
}

/// Upper bound for `sum_{n > m} d(n) n^{-s}` from `|sum_{n<=u} d(n) - u log u - (2 gamma - 1) u| <= sqrt(u)`.
fn divisor_tail_beyond(m: f64, big_d: f64, s: f64) -> f64 {
    let a = s - 1.0;
    let l = m.ln();
    let p = m.powf(-a);
    let int_log = p * (l / a + 1.0 / (a * a));
    let int_lin = p / a;
    let int_sqrt = m.powf(0.5 - s) / (s - 0.5);
    -m.powf(-s) * big_d + s * (int_log + (2.0 * EULER_GAMMA - 1.0) * int_lin + int_sqrt)
}

/// `int_m^inf u^{-1-b} log^k u du` for `b > 0`.
fn log_power_tail(m: f64, b: f64, k: i32) -> f64 {
    let l = m.ln();
    let mut sum = 0.0;
    let mut fall = 1.0;
    for j in 0..=k {
        sum += fall * l.powi(k - j) / b.powi(j + 1);
        fall *= (k - j) as f64;
    }
    m.powf(-b) * sum
}

/// Upper bound for `sum_{n > m} d(n)^2 n^{-s}` from the `d^2` summatory asymptotic.
fn square_tail_beyond(m: f64, big_s: f64, s: f64) -> f64 {
    let c = &CONSTANTS;
    let coeffs = [c.d4_coeff.1, c.d3_coeff.1, c.d2_coeff.1, 1.0 / (PI * PI)];
    let a = s - 1.0;
    let main: f64 = coeffs
        .iter()
        .enumerate()
        .map(|(k, ck)| ck * log_power_tail(m, a, k as i32))
        .sum();
    let rem = c.d2_error * log_power_tail(m, s - 0.75, 1);
    -m.powf(-s) * big_s + s * (main + rem)
}

/// Tails without exponential decay are summed exactly up to `TAIL_SPLIT * x`
/// and completed analytically beyond.
const TAIL_SPLIT: f64 = 100.0;

fn tail_split(table: &DivisorTable, x: f64) -> Result<u64> {
    let m = (TAIL_SPLIT * x).ceil() as u64;
    if m > table.limit() {
        return Err(Error::LimitExceeded {
            requested: m,
            ceiling: table.limit(),
        });
    }
    Ok(m)
}

fn check(cond: bool, lemma: DivisorLemma, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        domain(format!("{}: {what}", lemma.name()))
    }
}

/// Check one bound at `(x, sigma, x0)`: `lhs` is the sieved sum (for tails
/// beyond the table, the sieved part plus a rigorous upper bound for the
/// rest), `rhs` the closed-form bound.
pub fn verify_divisor_lemma(
    table: &DivisorTable,
    lemma: DivisorLemma,
    x: f64,
    sigma: f64,
    x0: f64,
) -> Result<VerificationReport> {
    check(
        x0 >= lemma.min_x0() && x >= x0 && x.is_finite(),
        lemma,
        "need x >= x0 >= 2 (e^4 for the e^{-2n/x} tail)",
    )?;
    if let Some((lo, hi)) = lemma.sigma_range() {
        let ok = match lemma {
            DivisorLemma::DivisorHead => sigma <= 0.5,
            DivisorLemma::DivisorTail | DivisorLemma::SquareTail => sigma > 1.0 + 1e-9,
            DivisorLemma::SquareHead => (-3.0..1.0).contains(&sigma),
            DivisorLemma::SquareExpTail => sigma >= -1.0,
            _ => sigma >= lo && sigma <= hi,
        };
        check(
            ok && sigma.is_finite(),
            lemma,
            &format!("sigma = {sigma} outside the admissible range"),
        )?;
    }
    let l = x.ln();
    let up_to = |power, weight| {
        weighted_divisor_sum(table, x, sigma, power, weight, Side::UpTo).map(|b| b.hi())
    };
    let scale1 = x.powf(1.0 - sigma) * l;
    let scale3 = x.powf(1.0 - sigma) * l.powi(3);
    let (lhs, rhs) = match lemma {
        DivisorLemma::DivisorHead => (
            up_to(1, Weight::One)?,
            d1(x0, sigma.min(0.0))? / (1.0 - sigma) * scale1,
        ),
        DivisorLemma::DivisorTail => {
            let m = tail_split(table, x)?;
            let head = range_sum(table, x.floor() as u64 + 1, m, sigma, 1);
            let rest = divisor_tail_beyond(m as f64, table.prefix(m) as f64, sigma);
            (head + rest, d2(x0, sigma)? / (sigma - 1.0).powi(2) * scale1)
        }
        DivisorLemma::DivisorExpHead => (
            up_to(1, Weight::OneMinusExp)?,
            d1(x0, sigma - 1.0)? / (2.0 - sigma) * scale1,
        ),
        DivisorLemma::DivisorExpTail => {
            let s = weighted_divisor_sum(
                table,
                x,
                sigma,
                1,
                Weight::Exp,
                Side::Above { cutoff: None },
            )?;
            (s.hi(), d3(x0)? * scale1)
        }
        DivisorLemma::SquareHead => (up_to(2, Weight::One)?, d4(x0, sigma)? * scale3),
        DivisorLemma::SquareTail => {
            let m = tail_split(table, x)?;
            let head = range_sum(table, x.floor() as u64 + 1, m, sigma, 2);
            let rest = square_tail_beyond(m as f64, table.prefix_sq(m) as f64, sigma);
            (head + rest, d5(x0, sigma)? / (sigma - 1.0).powi(4) * scale3)
        }
        DivisorLemma::SquareLogMean => {
            let s = weighted_divisor_sum(table, x, 1.0, 2, Weight::One, Side::UpTo)?;
            let main = l.powi(4) / (4.0 * PI * PI);
            ((s.value - main).abs() + s.abs_err, d6(x0)? * l.powi(3))
        }
        DivisorLemma::SquareExpTail => {
            let s = weighted_divisor_sum(
                table,
                x,
                sigma,
                2,
                Weight::Exp2,
                Side::Above { cutoff: None },
            )?;
            (s.hi(), d7(x0)? * scale3)
        }
        DivisorLemma::SquareExpHead => (
            up_to(2, Weight::ExpMinusOneSq)?,
            d4(x0, sigma - 2.0)? * scale3,
        ),
        DivisorLemma::SquareSummatory => {
            let floor = x.floor() as u64;
            if floor > table.limit() {
                return Err(Error::LimitExceeded {
                    requested: floor,
                    ceiling: table.limit(),
                });
            }
            let exact = table.prefix_sq(floor) as f64;
            let c = &CONSTANTS;
            let poly =
                |k2: f64, k3: f64, k4: f64| x * (l.powi(3) / (PI * PI) + k2 * l * l + k3 * l + k4);
            let lo = poly(c.d2_coeff.0, c.d3_coeff.0, c.d4_coeff.0);
            let hi = poly(c.d2_coeff.1, c.d3_coeff.1, c.d4_coeff.1);
            (
                (exact - lo).abs().max((exact - hi).abs()),
                c.d2_error * x.powf(0.75) * l,
            )
        }
    };
    let inputs: Vec<(&str, f64)> = match lemma.sigma_range() {
        Some(_) => vec![("x", x), ("sigma", sigma), ("x0", x0)],
        None => vec![("x", x), ("x0", x0)],
    };
    Ok(VerificationReport::upper(lemma.name(), &inputs, lhs, rhs))
}

/// `points` sample points `(x, sigma, x0)` for `lemma`: `x` log-spaced from
/// the smallest admissible `x0` up to `min(x_max, lemma.max_x(limit))`,
/// `sigma` spread over the lemma's range by a golden-ratio sequence, and
/// `x0 = x`, where the constants are smallest.
pub fn lemma_grid(
    lemma: DivisorLemma,
    limit: u64,
    x_max: f64,
    points: usize,
) -> Vec<(f64, f64, f64)> {
    let lo = lemma.min_x0();
    let hi = x_max.min(lemma.max_x(limit));
    let golden = 0.5 * (5f64.sqrt() - 1.0);
    (0..points)
        .map(|i| {
            let t = if points > 1 {
                i as f64 / (points - 1) as f64
            } else {
                0.0
            };
            let x = (lo.ln() + t * (hi / lo).ln()).exp().clamp(lo, hi);
            let sigma = match lemma.sigma_range() {
                Some((a, b)) => a + (b - a) * ((i as f64 + 0.5) * golden).fract(),
                None => 1.0,
            };
            (x, sigma, x)
        })
        .collect()
}

/// Run [`verify_divisor_lemma`] over [`lemma_grid`] for every lemma.
pub fn verify_divisor_suite(
    table: &DivisorTable,
    x_max: f64,
    points: usize,
) -> Result<Vec<VerificationReport>> {
    let jobs: Vec<(DivisorLemma, (f64, f64, f64))> = DivisorLemma::ALL
        .iter()
        .flat_map(|&lemma| {
            lemma_grid(lemma, table.limit(), x_max, points)
                .into_iter()
                .map(move |p| (lemma, p))
        })
        .collect();
    jobs.par_iter()
        .map(|&(lemma, (x, s, x0))| verify_divisor_lemma(table, lemma, x, s, x0))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divisor::divisor_sieve;
    use std::sync::OnceLock;

    fn table() -> &'static DivisorTable {
        static T: OnceLock<DivisorTable> = OnceLock::new();
        T.get_or_init(|| divisor_sieve(1_000_000).unwrap())
    }

    #[test]
    fn closed_form_examples_hold() {
        let r = verify_divisor_lemma(table(), DivisorLemma::DivisorHead, 1e5, 0.3, 1e3).unwrap();
        assert!(r.holds, "{r:?}");
        let r = verify_divisor_lemma(table(), DivisorLemma::SquareLogMean, 1e6, 1.0, 1e3).unwrap();
        assert!(r.holds, "{r:?}");
        let r = verify_divisor_lemma(table(), DivisorLemma::DivisorHead, 2.0, 0.0, 2.0).unwrap();
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn hypotheses_are_enforced() {
        let t = table();
        assert!(verify_divisor_lemma(t, DivisorLemma::DivisorHead, 10.0, 0.6, 2.0).is_err());
        assert!(verify_divisor_lemma(t, DivisorLemma::DivisorHead, 10.0, 0.0, 20.0).is_err());
        assert!(verify_divisor_lemma(t, DivisorLemma::DivisorTail, 10.0, 1.0, 2.0).is_err());
        assert!(verify_divisor_lemma(t, DivisorLemma::SquareExpTail, 50.0, 0.0, 50.0).is_err());
        assert!(verify_divisor_lemma(t, DivisorLemma::SquareExpHead, 50.0, 2.5, 50.0).is_err());
    }

    #[test]
    fn analytic_tails_bound_sieved_tails() {
        // The completion beyond a small table must dominate the exact sum.
        let small = divisor_sieve(20_000).unwrap();
        let big = table();
        for s in [1.1, 1.5, 2.5] {
            let exact = |p| {
                weighted_divisor_sum(big, 1e6, s, p, Weight::One, Side::UpTo)
                    .unwrap()
                    .value
                    - weighted_divisor_sum(big, 2e4, s, p, Weight::One, Side::UpTo)
                        .unwrap()
                        .value
            };
            assert!(divisor_tail_beyond(2e4, small.prefix(20_000) as f64, s) >= exact(1));
            assert!(square_tail_beyond(2e4, small.prefix_sq(20_000) as f64, s) >= exact(2));
        }
    }

    #[test]
    fn log_power_tail_matches_quadrature() {
        let (m, b) = (50.0f64, 0.7);
        for k in 0..4 {
            // Substitute u = m e^v.
            let f = |v: f64| (m.ln() + v).powi(k) * (-b * v).exp();
            let direct = crate::numerics::fixed_gauss(f, 0.0, 200.0, 400) * m.powf(-b);
            assert!((log_power_tail(m, b, k) - direct).abs() < 1e-10 * direct);
        }
    }

    #[test]
    fn small_grid_holds() {
        let reports = verify_divisor_suite(table(), 1e5, 12).unwrap();
        assert_eq!(reports.len(), 12 * DivisorLemma::ALL.len());
        for r in reports {
            assert!(r.holds, "{r:?}");
        }
    }
}
