//! Exact weighted sums of `d(n)` and `d(n)^2`.

use super::table::DivisorTable;
use crate::bracket::Bracket;
use crate::error::{domain, Error, Result};
use crate::numerics::KahanSum;

/// Multiplicative weight applied to the `n`-th term, as a function of `n/x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    One,
    /// `e^{-n/x}`
    Exp,
    /// `1 - e^{-n/x}`
    OneMinusExp,
    /// `(e^{-n/x} - 1)^2`
    ExpMinusOneSq,
    /// `e^{-2n/x}`
    Exp2,
}

impl Weight {
    fn at(self, u: f64) -> f64 {
        match self {
            Weight::One => 1.0,
            Weight::Exp => (-u).exp(),
            Weight::OneMinusExp => -(-u).exp_m1(),
            Weight::ExpMinusOneSq => (-u).exp_m1().powi(2),
            Weight::Exp2 => (-2.0 * u).exp(),
        }
    }

    /// Decay rate `c` in `e^{-c n/x}` for the weights allowed above `x`.
    fn decay(self) -> Option<f64> {
        match self {
            Weight::Exp => Some(1.0),
            Weight::Exp2 => Some(2.0),
            _ => None,
        }
    }
}

/// Range of summation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `1 <= n <= floor(x)`.
    UpTo,
    /// `floor(x) < n <= cutoff`, defaulting to `40x` (capped by the table).
    Above { cutoff: Option<u64> },
}

/// Multiple of `x` at which sums above `x` are truncated by default.
pub const DEFAULT_CUTOFF_FACTOR: f64 = 40.0;

fn check_power(power: u32) -> Result<()> {
    if power == 1 || power == 2 {
        Ok(())
    } else {
        domain(format!("divisor power must be 1 or 2, got {power}"))
    }
}

fn term(table: &DivisorTable, n: u64, power: u32, sigma: f64) -> f64 {
    let d = table.d(n) as f64;
    let dp = if power == 1 { d } else { d * d };
    if sigma == 0.0 {
        dp
    } else {
        dp * (n as f64).powf(-sigma)
    }
}

/// `sum d(n)^power n^{-sigma} w(n/x)` over the requested range.
///
/// The value is exact up to rounding. For sums above `x` the bracket radius
/// also covers the truncated tail, bounded through `d(n) <= 2 sqrt(n)` and a
/// geometric majorant; the upper end of the bracket is therefore an upper
/// bound for the infinite sum.
pub fn weighted_divisor_sum(
    table: &DivisorTable,
    x: f64,
    sigma: f64,
    power: u32,
    weight: Weight,
    side: Side,
) -> Result<Bracket> {
    check_power(power)?;
    if !(x >= 1.0) || !sigma.is_finite() {
        return domain(format!(
            "need x >= 1 and finite sigma, got x={x}, sigma={sigma}"
        ));
    }
    let floor = x.floor() as u64;
    let (lo, hi) = match side {
        Side::UpTo => (1, floor),
        Side::Above { cutoff } => {
            if weight.decay().is_none() {
                return domain("sums above x need an exponentially decaying weight");
            }
            let default = (DEFAULT_CUTOFF_FACTOR * x).ceil() as u64;
            (floor + 1, cutoff.unwrap_or(default))
        }
    };
    if hi > table.limit() {
        return Err(Error::LimitExceeded {
            requested: hi,
            ceiling: table.limit(),
        });
    }
    let mut acc = KahanSum::default();
    for n in lo..=hi {
        acc.add(term(table, n, power, sigma) * weight.at(n as f64 / x));
    }
    let value = acc.value();
    let rounding = 4.0 * f64::EPSILON * value.abs();
    let tail = match (side, weight.decay()) {
        (Side::Above { .. }, Some(c)) => {
            let tail = geometric_tail(hi, x, sigma, power, c);
            if !(tail <= 1e-9 * value.abs()) {
                return Err(Error::CutoffTooSmall {
                    cutoff: hi,
                    tail,
                    value,
                });
            }
            tail
        }
        _ => 0.0,
    };
    Ok(Bracket::new(value, tail + rounding))
}

/// Bound for `sum_{n > m} d(n)^p n^{-sigma} e^{-c n/x}` from
/// `d(n)^p <= 2^p n^{p/2}`.
fn geometric_tail(m: u64, x: f64, sigma: f64, power: u32, c: f64) -> f64 {
    let e = power as f64 / 2.0 - sigma;
    let n1 = m as f64 + 1.0;
    let first = 2f64.powi(power as i32) * (e * n1.ln() - c * n1 / x).exp();
    let growth = if e > 0.0 {
        ((n1 + 1.0) / n1).powf(e)
    } else {
        1.0
    };
    let ratio = growth * (-c / x).exp();
    if ratio >= 1.0 {
        f64::INFINITY
    } else {
        first / (1.0 - ratio)
    }
}

/// `sum_{lo <= n <= hi} d(n)^power n^{-sigma}`, compensated.
pub(crate) fn range_sum(table: &DivisorTable, lo: u64, hi: u64, sigma: f64, power: u32) -> f64 {
    (lo..=hi)
        .map(|n| term(table, n, power, sigma))
        .collect::<KahanSum>()
        .value()
}

/// `sum_{n <= x} d(n)^power n^{-sigma}` at every `x` in `xs`, in one pass.
pub fn partial_sums_at(
    table: &DivisorTable,
    xs: &[f64],
    sigma: f64,
    power: u32,
) -> Result<Vec<f64>> {
    check_power(power)?;
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut out = vec![0.0; xs.len()];
    let mut acc = KahanSum::default();
    let mut n = 1u64;
    for i in order {
        let x = xs[i];
        if !(x >= 1.0) {
            return domain(format!("need x >= 1, got {x}"));
        }
        let floor = x.floor() as u64;
        if floor > table.limit() {
            return Err(Error::LimitExceeded {
                requested: floor,
                ceiling: table.limit(),
            });
        }
        while n <= floor {
            acc.add(term(table, n, power, sigma));
            n += 1;
        }
        out[i] = acc.value();
    }
    Ok(out)
}
