//! Special functions and quadrature.

mod gamma;
mod moment;
mod quadrature;
mod zeta;

pub use gamma::{
    abs_chi, abs_gamma, gamma_abs_moment, ln_abs_chi, ln_abs_gamma, ln_abs_gamma_scaled,
};
pub use moment::{moment_numeric, moment_panels};
pub use quadrature::{
    fixed_gauss, integrate_exp_weighted, integrate_finite, integrate_with_breaks, QuadratureConfig,
    TailPolicy,
};
pub use zeta::{
    hardy_z, theta, zeta, zeta_euler_maclaurin, zeta_half, ComplexBracket, RIEMANN_SIEGEL_FROM,
};

/// Neumaier's variant of compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    comp: f64,
}

impl KahanSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for KahanSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut k = KahanSum::default();
        for x in iter {
            k.add(x);
        }
        k
    }
}
