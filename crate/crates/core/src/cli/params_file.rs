//! Flat `key = value` parameter files.

use crate::error::{Error, Result};
use crate::moment4::{MomentParams, ShiftExponents};
use std::collections::BTreeMap;

/// Keys accepted for moment parameters, in file order.
pub const MOMENT_KEYS: [&str; 12] = [
    "T0", "c1", "c2", "sigma1", "sigma2", "sigma3", "sigma4", "sigma5", "frak_a1", "frak_a2",
    "frak_b1", "frak_b2",
];

/// Parse `key = value` lines; `#` starts a comment, blank lines are skipped.
pub fn parse_key_values(text: &str) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected key = value", i + 1)))?;
        let key = k.trim().to_string();
        let value: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: {:?} is not a number", i + 1, v.trim())))?;
        if out.insert(key.clone(), value).is_some() {
            return Err(Error::Parse(format!("line {}: duplicate key {key}", i + 1)));
        }
    }
    Ok(out)
}

/// `base` with the entries of `values` substituted; unknown keys are errors.
pub fn moment_params_from(
    values: &BTreeMap<String, f64>,
    base: MomentParams,
) -> Result<MomentParams> {
    let mut p = base;
    for (k, &v) in values {
        let slot = match k.as_str() {
            "T0" => &mut p.t0,
            "c1" => &mut p.c[0],
            "c2" => &mut p.c[1],
            "sigma1" => &mut p.sigma[0],
            "sigma2" => &mut p.sigma[1],
            "sigma3" => &mut p.sigma[2],
            "sigma4" => &mut p.sigma[3],
            "sigma5" => &mut p.sigma[4],
            "frak_a1" => &mut p.shift_a.scale,
            "frak_a2" => &mut p.shift_a.power,
            "frak_b1" => &mut p.shift_b.scale,
            "frak_b2" => &mut p.shift_b.power,
            other => {
                return Err(Error::Parse(format!(
                    "unknown parameter {other:?}; expected one of {MOMENT_KEYS:?}"
                )))
            }
        };
        *slot = v;
    }
    Ok(p)
}

/// Render `p` in the file format read by [`moment_params_from`].
pub fn render_moment_params(p: &MomentParams) -> String {
    let ShiftExponents {
        scale: a1,
        power: a2,
    } = p.shift_a;
    let ShiftExponents {
        scale: b1,
        power: b2,
    } = p.shift_b;
    let values = [
        p.t0, p.c[0], p.c[1], p.sigma[0], p.sigma[1], p.sigma[2], p.sigma[3], p.sigma[4], a1, a2,
        b1, b2,
    ];
    MOMENT_KEYS
        .iter()
        .zip(values)
        .map(|(k, v)| format!("{k} = {v:?}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for p in [
            MomentParams::half_power_set(),
            MomentParams::asymptotic_set(),
        ] {
            let text = render_moment_params(&p);
            let q = moment_params_from(
                &parse_key_values(&text).unwrap(),
                MomentParams::half_power_set(),
            )
            .unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn comments_and_partial_override() {
        let m = parse_key_values("# published set\n\nc1 = -0.9   # tweak\nT0=1e5\n").unwrap();
        let p = moment_params_from(&m, MomentParams::asymptotic_set()).unwrap();
        assert_eq!(p.c[0], -0.9);
        assert_eq!(p.t0, 1e5);
        assert_eq!(p.c[1], MomentParams::asymptotic_set().c[1]);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_key_values("c1 -0.9"), Err(Error::Parse(_))));
        assert!(matches!(parse_key_values("c1 = x"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_key_values("c1 = 1\nc1 = 2"),
            Err(Error::Parse(_))
        ));
        let m = parse_key_values("gamma = 1").unwrap();
        assert!(moment_params_from(&m, MomentParams::asymptotic_set()).is_err());
    }
}
