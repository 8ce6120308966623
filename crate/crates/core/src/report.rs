//! Per-check verification records.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Outcome of one inequality check `lhs ≤ rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub inputs: BTreeMap<String, f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    /// `rhs - lhs`; negative exactly when the check fails.
    pub margin: f64,
}

impl VerificationReport {
    /// Report for the inequality `lhs ≤ rhs`.
    pub fn upper(check: impl Into<String>, inputs: &[(&str, f64)], lhs: f64, rhs: f64) -> Self {
        let holds = lhs.is_finite() && rhs.is_finite() && lhs <= rhs;
        VerificationReport {
            check: check.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            lhs,
            rhs,
            holds,
            margin: rhs - lhs,
        }
    }

    /// Report for a boolean condition, with `margin` supplied by the caller.
    pub fn flag(
        check: impl Into<String>,
        inputs: &[(&str, f64)],
        lhs: f64,
        rhs: f64,
        holds: bool,
    ) -> Self {
        VerificationReport {
            check: check.into(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            lhs,
            rhs,
            holds,
            margin: rhs - lhs,
        }
    }

    /// Single-line JSON rendering with keys in sorted order.
    pub fn to_json_line(&self) -> String {
        let v = serde_json::to_value(self).expect("report serialises");
        serde_json::to_string(&v).expect("value serialises")
    }
}

/// `x` rounded to `digits` significant digits; scientific notation outside `[1e-4, 1e6)`.
pub fn format_significant(x: f64, digits: usize) -> String {
    let digits = digits.max(1);
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        return format!("{:.*e}", digits - 1, x);
    }
    let decimals = (digits as i32 - 1 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // Rounding may carry into a new leading digit, e.g. 9.9996 -> 10.000.
    let carried = s
        .trim_start_matches('-')
        .split('.')
        .next()
        .map_or(0, |i| i.trim_start_matches('0').len());
    if decimals > 0 && carried as i32 > (mag + 1).max(1) {
        return format!("{x:.prec$}", prec = decimals - 1);
    }
    s
}
