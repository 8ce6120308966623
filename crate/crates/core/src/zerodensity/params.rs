//! Parameters of the zero-density theorem and the published parameter table.

use crate::constants::CONSTANTS;
use crate::error::{domain, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::E;

/// Free parameters of the zero-density theorem.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZdParams {
    pub sigma1: f64,
    pub sigma2: f64,
    pub t0: f64,
    pub h0: f64,
    /// Lower height `H` of the zero count `N(sigma, T) - N(sigma, H)`.
    pub big_h: f64,
    pub d: f64,
    pub kappa: f64,
    pub delta: f64,
    /// Mollifier length factor, `X = h T`.
    pub h: f64,
    pub a0: f64,
}

impl ZdParams {
    /// The specialisation `T0 = H0 = H = H_RH`, `h = 1`.
    pub fn pinned(sigma1: f64, sigma2: f64, d: f64, kappa: f64, delta: f64, a0: f64) -> Self {
        let hr = CONSTANTS.h_rh;
        ZdParams {
            sigma1,
            sigma2,
            t0: hr,
            h0: hr,
            big_h: hr,
            d,
            kappa,
            delta,
            h: 1.0,
            a0,
        }
    }

    /// Hypotheses of the theorem, other than those involving `T` and `sigma`.
    pub fn validate(&self) -> Result<()> {
        let c = &CONSTANTS;
        let all_finite = [
            self.sigma1,
            self.sigma2,
            self.t0,
            self.h0,
            self.big_h,
            self.d,
            self.kappa,
            self.delta,
            self.h,
            self.a0,
        ]
        .iter()
        .all(|v| v.is_finite());
        let checks = [
            (all_finite, "all parameters finite"),
            (self.h0 >= c.zd_min_h0, "H0 >= 1002"),
            (self.big_h >= self.h0, "H >= H0"),
            (self.d > 0.0, "d > 0"),
            (
                self.t0 >= (2.0 * self.d).exp().max(E.exp()),
                "T0 >= max(e^{2d}, e^e)",
            ),
            (self.kappa > 0.0, "kappa > 0"),
            (self.h * self.t0 >= c.mollifier_min_x, "h >= 1e9 / T0"),
            (
                self.delta > 0.0 && self.delta <= 0.5 * (self.h * self.t0).ln(),
                "0 < delta <= log(h T0) / 2",
            ),
            (
                0.5 <= self.sigma1 && self.sigma1 <= self.sigma2 && self.sigma2 <= 1.0,
                "1/2 <= sigma1 <= sigma2 <= 1",
            ),
            (self.a0 >= c.asymptotic_from, "A0 >= 1e5"),
        ];
        for (ok, what) in checks {
            if !ok {
                return domain(format!("zero-density parameters violate {what}: {self:?}"));
            }
        }
        Ok(())
    }

    /// `validate` plus the pinned specialisation with `d <= 0.89`.
    pub fn validate_pinned(&self) -> Result<()> {
        self.validate()?;
        let hr = CONSTANTS.h_rh;
        if self.t0 != hr || self.h0 != hr || self.big_h != hr || self.h != 1.0 {
            return domain(format!(
                "coefficients need T0 = H0 = H = {hr:e} and h = 1: {self:?}"
            ));
        }
        if self.d > CONSTANTS.corollary_max_d {
            return domain(format!(
                "coefficients need d <= {}, got {}",
                CONSTANTS.corollary_max_d, self.d
            ));
        }
        Ok(())
    }
}

/// One row of the published table: interval, tuned parameters and coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Table1Row {
    pub sigma1: f64,
    pub sigma2: f64,
    pub d: f64,
    pub kappa: f64,
    pub delta: f64,
    pub log10_a0: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

impl Table1Row {
    /// Pinned parameters for this row.
    pub fn params(&self) -> ZdParams {
        ZdParams::pinned(
            self.sigma1,
            self.sigma2,
            self.d,
            self.kappa,
            self.delta,
            10f64.powf(self.log10_a0),
        )
    }

    /// `[B1, B2, B3]` as tabulated.
    pub fn published(&self) -> [f64; 3] {
        [self.b1, self.b2, self.b3]
    }
}

const fn row(v: [f64; 9]) -> Table1Row {
    Table1Row {
        sigma1: v[0],
        sigma2: v[1],
        d: v[2],
        kappa: v[3],
        delta: v[4],
        log10_a0: v[5],
        b1: v[6],
        b2: v[7],
        b3: v[8],
    }
}

/// The sixteen published rows, `sigma` running over `[n/32, (n+1)/32]`, `n = 16..31`.
pub const TABLE1: [Table1Row; 16] = [
    row([0.5, 0.53125, 0.28, 0.36, 0.012, 10.3, 5.360, 9.461, 167.8]),
    row([
        0.53125, 0.5625, 0.28, 0.34, 0.025, 10.4, 6.380, 9.168, 162.6,
    ]),
    row([
        0.5625, 0.59375, 0.28, 0.32, 0.038, 10.4, 7.453, 8.875, 157.4,
    ]),
    row([0.59375, 0.625, 0.28, 0.30, 0.051, 10.4, 8.604, 8.582, 152.2]),
    row([0.625, 0.65625, 0.28, 0.28, 0.066, 10.4, 9.848, 8.290, 147.0]),
    row([
        0.65625, 0.6875, 0.28, 0.26, 0.080, 10.4, 11.20, 7.997, 141.9,
    ]),
    row([
        0.6875, 0.71875, 0.28, 0.24, 0.096, 10.6, 12.65, 7.704, 136.7,
    ]),
    row([0.71875, 0.75, 0.28, 0.22, 0.112, 10.6, 14.23, 7.411, 131.5]),
    row([0.75, 0.78125, 0.28, 0.20, 0.129, 10.6, 15.95, 7.118, 126.3]),
    row([
        0.78125, 0.8125, 0.28, 0.18, 0.147, 10.6, 17.84, 6.826, 121.1,
    ]),
    row([
        0.8125, 0.84375, 0.28, 0.16, 0.166, 10.6, 19.97, 6.533, 115.9,
    ]),
    row([0.84375, 0.875, 0.28, 0.15, 0.187, 10.6, 22.44, 6.240, 110.7]),
    row([0.875, 0.90625, 0.28, 0.13, 0.209, 10.8, 25.51, 5.947, 105.5]),
    row([
        0.90625, 0.9375, 0.29, 0.11, 0.234, 10.8, 29.71, 5.463, 96.87,
    ]),
    row([
        0.9375, 0.96875, 0.29, 0.09, 0.261, 10.8, 36.09, 5.180, 91.86,
    ]),
    row([0.96875, 1.0, 0.29, 0.07, 0.292, 10.8, 46.92, 4.897, 86.84]),
];

/// Row `index` in `1..=16`.
pub fn table1_row(index: usize) -> Result<Table1Row> {
    if !(1..=TABLE1.len()).contains(&index) {
        return domain(format!("table row must be in 1..=16, got {index}"));
    }
    Ok(TABLE1[index - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals_tile_the_right_half() {
        for (n, r) in TABLE1.iter().enumerate() {
            assert_eq!(r.sigma1, (16 + n) as f64 / 32.0);
            assert_eq!(r.sigma2, (17 + n) as f64 / 32.0);
        }
    }

    #[test]
    fn every_row_is_admissible() {
        for r in TABLE1 {
            r.params().validate_pinned().unwrap();
        }
    }

    #[test]
    fn violations() {
        let base = TABLE1[0].params();
        let mut p = base;
        p.d = 0.9;
        assert!(p.validate().is_ok() && p.validate_pinned().is_err());
        let mut p = base;
        p.h0 = 1000.0;
        p.big_h = 1000.0;
        assert!(p.validate().is_err());
        let mut p = base;
        p.h = 1e-4;
        assert!(p.validate().is_err());
        let mut p = base;
        p.delta = 20.0;
        assert!(p.validate().is_err());
        let mut p = base;
        p.a0 = 9e4;
        assert!(p.validate().is_err());
        let mut p = base;
        p.t0 = 2e12;
        assert!(p.validate().is_ok() && p.validate_pinned().is_err());
        assert!(table1_row(0).is_err() && table1_row(17).is_err());
        assert_eq!(table1_row(12).unwrap().b1, 22.44);
    }
}
