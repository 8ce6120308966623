//! Value with an absolute error radius.

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

/// A real number known to lie in `[value - abs_err, value + abs_err]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub value: f64,
    pub abs_err: f64,
}

impl Bracket {
    pub fn new(value: f64, abs_err: f64) -> Self {
        Bracket {
            value,
            abs_err: abs_err.abs(),
        }
    }

    pub fn exact(value: f64) -> Self {
        Bracket {
            value,
            abs_err: 0.0,
        }
    }

    /// Bracket covering the closed interval `[lo, hi]`.
    pub fn from_interval(lo: f64, hi: f64) -> Self {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        Bracket {
            value: 0.5 * (lo + hi),
            abs_err: 0.5 * (hi - lo),
        }
    }

    pub fn lo(&self) -> f64 {
        self.value - self.abs_err
    }

    pub fn hi(&self) -> f64 {
        self.value + self.abs_err
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo() && x <= self.hi()
    }

    /// True when the two brackets share at least one point.
    pub fn overlaps(&self, other: &Bracket) -> bool {
        self.lo() <= other.hi() && other.lo() <= self.hi()
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite() && self.abs_err.is_finite()
    }

    pub fn widen(self, extra: f64) -> Self {
        Bracket::new(self.value, self.abs_err + extra.abs())
    }

    /// Largest magnitude in the bracket.
    fn magnitude(&self) -> f64 {
        self.value.abs() + self.abs_err
    }

    /// Result of a rounded operation on operands of size up to `scale`,
    /// widened outward by a few ulps of `scale`.
    fn rounded(value: f64, abs_err: f64, scale: f64) -> Self {
        Bracket::new(value, abs_err.abs() + 4.0 * f64::EPSILON * scale)
    }
}

impl Add for Bracket {
    type Output = Bracket;
    fn add(self, o: Bracket) -> Bracket {
        Bracket::rounded(
            self.value + o.value,
            self.abs_err + o.abs_err,
            self.magnitude() + o.magnitude(),
        )
    }
}

impl Sub for Bracket {
    type Output = Bracket;
    fn sub(self, o: Bracket) -> Bracket {
        Bracket::rounded(
            self.value - o.value,
            self.abs_err + o.abs_err,
            self.magnitude() + o.magnitude(),
        )
    }
}

impl Neg for Bracket {
    type Output = Bracket;
    fn neg(self) -> Bracket {
        Bracket::new(-self.value, self.abs_err)
    }
}

impl Mul for Bracket {
    type Output = Bracket;
    fn mul(self, o: Bracket) -> Bracket {
        let err =
            self.value.abs() * o.abs_err + o.value.abs() * self.abs_err + self.abs_err * o.abs_err;
        Bracket::rounded(self.value * o.value, err, self.magnitude() * o.magnitude())
    }
}

impl Mul<f64> for Bracket {
    type Output = Bracket;
    fn mul(self, k: f64) -> Bracket {
        Bracket::rounded(
            self.value * k,
            self.abs_err * k.abs(),
            self.magnitude() * k.abs(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn arithmetic_encloses_endpoints(
            v1 in -1e6f64..1e6, e1 in 0.0f64..1e3, v2 in -1e6f64..1e6, e2 in 0.0f64..1e3,
        ) {
            let (a, b) = (Bracket::new(v1, e1), Bracket::new(v2, e2));
            for x in [a.lo(), a.hi()] {
                for y in [b.lo(), b.hi()] {
                    prop_assert!((a * b).contains(x * y));
                    prop_assert!((a + b).contains(x + y));
                    prop_assert!((a - b).contains(x - y));
                }
            }
        }
    }

    #[test]
    fn product_encloses_all_endpoint_products() {
        let a = Bracket::new(2.0, 0.1);
        let b = Bracket::new(-3.0, 0.2);
        let p = a * b;
        for x in [a.lo(), a.hi()] {
            for y in [b.lo(), b.hi()] {
                assert!(p.contains(x * y));
            }
        }
    }

    #[test]
    fn interval_round_trip() {
        let b = Bracket::from_interval(3.0, 1.0);
        assert_eq!(b.lo(), 1.0);
        assert_eq!(b.hi(), 3.0);
        assert!(b.overlaps(&Bracket::new(3.5, 0.5)));
        assert!(!b.overlaps(&Bracket::new(3.5, 0.4)));
    }
}
