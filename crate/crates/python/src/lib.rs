//! Python module `explicit_ingham`: constants, bounds, verification suites
//! and parameter searches of the core crate.

use explicit_ingham::cli::{moment_params_from, run_suite, Suite, SuiteOptions};
use explicit_ingham::moment4::{
    core_constants, corollary2_bounds, half_power_coefficient, moment_constants, theorem2_interval,
    MomentParams,
};
use explicit_ingham::numerics::{self, QuadratureConfig};
use explicit_ingham::optimize::{
    c1_problem, f1_problem, random_multistart, table1_problem, SearchSettings,
};
use explicit_ingham::zerodensity::compare_row;
use explicit_ingham::Error;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Domain(_) | Error::Parse(_) | Error::PoleInput { .. } | Error::InfeasibleStart => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) if !n.is_f64() => i.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(value_to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, value_to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn to_py<'py, T: Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let value = serde_json::to_value(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    value_to_py(py, &value)
}

fn preset(name: &str) -> PyResult<MomentParams> {
    match name {
        "asymptotic" => Ok(MomentParams::asymptotic_set()),
        "half_power" => Ok(MomentParams::half_power_set()),
        other => Err(PyValueError::new_err(format!(
            "unknown preset {other:?}; expected 'asymptotic' or 'half_power'"
        ))),
    }
}

fn moment_params(params: Option<BTreeMap<String, f64>>, base: &str) -> PyResult<MomentParams> {
    let base = preset(base)?;
    match params {
        Some(map) => moment_params_from(&map, base).map_err(py_err),
        None => Ok(base),
    }
}

/// `zeta(1/2 + it)` as `(re, im, abs_err)`.
#[pyfunction]
fn zeta_half(t: f64) -> (f64, f64, f64) {
    let z = numerics::zeta_half(t);
    (z.re, z.im, z.abs_err)
}

/// `int_a^b |zeta(1/2 + it)|^{2k} dt` as `(value, abs_err)`.
#[pyfunction]
fn moment_numeric(py: Python<'_>, k: f64, a: f64, b: f64) -> PyResult<(f64, f64)> {
    let r = py
        .detach(|| numerics::moment_numeric(k, a, b, &QuadratureConfig::default()))
        .map_err(py_err)?;
    Ok((r.value, r.abs_err))
}

/// Recomputed coefficients of table row `index` (1..=16) with deviations.
#[pyfunction]
fn table1_row<'py>(py: Python<'py>, index: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = py
        .detach(|| compare_row(index, &QuadratureConfig::default()))
        .map_err(py_err)?;
    to_py(py, &r)
}

/// Coefficient of `T log^{7/2}(T/2)` for the half-power preset, optionally overridden.
#[pyfunction]
#[pyo3(signature = (params=None))]
fn half_power(py: Python<'_>, params: Option<BTreeMap<String, f64>>) -> PyResult<f64> {
    let p = moment_params(params, "half_power")?;
    let c = py
        .detach(|| core_constants(&p, &QuadratureConfig::default()))
        .map_err(py_err)?;
    Ok(half_power_coefficient(&c, p.t0))
}

/// Every error-term constant for `params` over `preset`, by name.
#[pyfunction]
#[pyo3(signature = (params=None, preset="asymptotic"))]
fn moment_breakdown(
    py: Python<'_>,
    params: Option<BTreeMap<String, f64>>,
    preset: &str,
) -> PyResult<BTreeMap<String, f64>> {
    let p = moment_params(params, preset)?;
    let m = py
        .detach(|| moment_constants(&p, &QuadratureConfig::default()))
        .map_err(py_err)?;
    Ok(m.breakdown(p.t0))
}

/// Bounds on `M2(T)` and the octave interval around `M2(T, 2T)`.
#[pyfunction]
fn moment_bounds<'py>(py: Python<'py>, t: f64) -> PyResult<Bound<'py, PyAny>> {
    let fb = corollary2_bounds(t).map_err(py_err)?;
    let p = if t >= MomentParams::asymptotic_set().t0 {
        MomentParams::asymptotic_set()
    } else {
        MomentParams::half_power_set()
    };
    let m = py
        .detach(|| moment_constants(&p, &QuadratureConfig::default()))
        .map_err(py_err)?;
    let octave = theorem2_interval(t, &p, &m).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("final", to_py(py, &fb)?)?;
    out.set_item("octave", to_py(py, &octave)?)?;
    Ok(out.into_any())
}

fn suite(name: &str) -> PyResult<Suite> {
    Ok(match name {
        "divisor" => Suite::Divisor,
        "gamma-chi" => Suite::GammaChi,
        "meanvalue" => Suite::Meanvalue,
        "moments" => Suite::Moments,
        "table1" => Suite::Table1,
        "all" => Suite::All,
        other => return Err(PyValueError::new_err(format!("unknown suite {other:?}"))),
    })
}

/// Verification reports of a suite, as dictionaries.
#[pyfunction]
#[pyo3(signature = (name, samples=None, seed=0))]
fn verify<'py>(
    py: Python<'py>,
    name: &str,
    samples: Option<usize>,
    seed: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let s = suite(name)?;
    let opts = samples.map_or(
        SuiteOptions {
            seed,
            ..Default::default()
        },
        |n| SuiteOptions::with_samples(n, seed),
    );
    let reports = py
        .detach(|| run_suite(s, &opts, &QuadratureConfig::default()))
        .map_err(py_err)?;
    to_py(py, &reports)
}

/// Seeded multistart search on `target` (`"c1"`, `"f1"` or `"table1"`).
#[pyfunction]
#[pyo3(signature = (target, row=1, seed=0, trials=50, samples=100, polish=true))]
fn optimize<'py>(
    py: Python<'py>,
    target: &str,
    row: usize,
    seed: u64,
    trials: usize,
    samples: usize,
    polish: bool,
) -> PyResult<Bound<'py, PyAny>> {
    let cfg = QuadratureConfig::default();
    let prob = match target {
        "c1" => c1_problem(cfg),
        "f1" => f1_problem(cfg),
        "table1" => table1_problem(row, cfg),
        other => return Err(PyValueError::new_err(format!("unknown target {other:?}"))),
    }
    .map_err(py_err)?;
    let settings = SearchSettings {
        seed,
        trials,
        samples_per_trial: samples,
        polish,
        ..Default::default()
    };
    let prob = prob.with_settings(&settings);
    let r = py.detach(|| random_multistart(&prob)).map_err(py_err)?;
    to_py(py, &r)
}

#[pymodule]
#[pyo3(name = "explicit_ingham")]
fn explicit_ingham_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(zeta_half, m)?)?;
    m.add_function(wrap_pyfunction!(moment_numeric, m)?)?;
    m.add_function(wrap_pyfunction!(table1_row, m)?)?;
    m.add_function(wrap_pyfunction!(half_power, m)?)?;
    m.add_function(wrap_pyfunction!(moment_breakdown, m)?)?;
    m.add_function(wrap_pyfunction!(moment_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(optimize, m)?)?;
    Ok(())
}
