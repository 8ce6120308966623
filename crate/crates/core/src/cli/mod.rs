//! Command-line interface: argument parsing, dispatch and rendering.
//!
//! Exit codes: `0` success, `1` usage or domain error, `2` a check failed.

mod params_file;
mod suites;

pub use params_file::{moment_params_from, parse_key_values, render_moment_params, MOMENT_KEYS};
pub use suites::{
    divisor_suite, gamma_chi_suite, mean_value_suite, moments_suite, random_polynomial, run_suite,
    table1_suite, Suite, SuiteOptions, C1_BAND, CONTAINMENT_HEIGHTS, DIVISOR_SIEVE, DIVISOR_X_MAX,
    F1_BAND,
};

use crate::bracket::Bracket;
use crate::error::{domain, Error, Result};
use crate::moment4::{
    corollary2_bounds, moment_constants, theorem2_interval, third_moment_coeff, MomentParams,
};
use crate::numerics::{moment_numeric, QuadratureConfig};
use crate::optimize::{
    c1_problem, c1_published, f1_problem, f1_published, optimize_table1, random_multistart,
    table1_published, OptResult, SearchSettings,
};
use crate::report::{format_significant, VerificationReport};
use crate::zerodensity::{
    compare_row, compare_with, table1_csv, table1_row, RowComparison, Table1Row, TABLE1_TOLERANCE,
};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Largest height at which `moment --bound ... --numeric` cross-checks by quadrature.
pub const CROSS_CHECK_MAX_T: f64 = 2.0e4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

/// Explicit zero-density and fourth-moment constants for the Riemann zeta function.
#[derive(Debug, Parser)]
#[command(name = "explicit-ingham", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Significant digits in human and CSV output.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=17))]
    pub digits: u32,
    /// Worker threads for quadrature, suites and searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Relative quadrature tolerance.
    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,
    /// Absolute quadrature tolerance.
    #[arg(long, global = true)]
    pub abs_tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Recompute the zero-density coefficient table, optionally re-tuning its parameters.
    Table1(Table1Args),
    /// Fourth-moment quadrature and explicit bounds.
    Moment(MomentArgs),
    /// Run a lemma verification suite and stream its reports.
    Verify(VerifyArgs),
    /// Run a parameter search.
    Optimize(OptimizeArgs),
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Seed of the per-trial random streams
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random trials.
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Uniform draws per trial.
    #[arg(long, default_value_t = 100)]
    pub samples: u64,
    /// Polish the best draw with Nelder–Mead (default).
    #[arg(long, overrides_with = "no_polish")]
    pub polish: bool,
    /// Skip the Nelder–Mead polish.
    #[arg(long, overrides_with = "polish")]
    pub no_polish: bool,
    /// Also start from the published parameter set.
    #[arg(long)]
    pub from_published: bool,
}

impl SearchArgs {
    fn settings(&self) -> SearchSettings {
        SearchSettings {
            seed: self.seed,
            trials: self.trials as usize,
            samples_per_trial: self.samples as usize,
            polish: !self.no_polish,
            ..SearchSettings::default()
        }
    }
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Row in 1..=16.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=16), conflicts_with = "all", required_unless_present = "all")]
    pub row: Option<u64>,
    /// All sixteen rows.
    #[arg(long)]
    pub all: bool,
    /// Re-tune (d, kappa, delta, log10 A0) for each selected row.
    #[arg(long)]
    pub optimize: bool,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    /// `T log^4(T/2)/pi^2 + 20.7225 T log^{7/2}(T/2) + 1.9532e6`, `T >= 3000`.
    Upper4,
    /// Asymptotic upper bound, `T >= 1e5`.
    Asymp,
    /// Asymptotic lower bound, `T >= 1e5`.
    Lower,
    /// Coefficient of the third-moment bound, `T0 = T >= 1e5`.
    Third,
    /// Two-sided bound on `M2(T, 2T)` from the moment parameters.
    Theorem2,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    /// Compute `int_A^B |zeta(1/2+it)|^{2k} dt` by quadrature; with `--bound`, cross-check the bound.
    #[arg(long)]
    pub numeric: bool,
    /// Moment order `k > 0`
    #[arg(long)]
    pub k: Option<f64>,
    /// Lower limit `A >= 0`
    #[arg(long)]
    pub a: Option<f64>,
    /// Upper limit `B >= A`
    #[arg(long)]
    pub b: Option<f64>,
    #[arg(long, value_enum)]
    pub bound: Option<BoundKind>,
    /// Height `T` for `--bound`.
    #[arg(long = "T")]
    pub t: Option<f64>,
    /// `key = value` file overriding the moment parameters (`--bound theorem2`).
    #[arg(long)]
    pub params: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Group of checks to run
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Points per sampled check family.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: Option<u64>,
    /// Seed of the sampled checks
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// `B1` of one table row over `(d, kappa, delta, log10 A0)`
    Table1,
    /// Half-power coefficient at `T0 = 3000`
    C1,
    /// Asymptotic coefficient `F1` at `T0 = 1e5`
    F1,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    /// Objective to minimise
    #[arg(long, value_enum)]
    pub target: Target,
    /// Table row for `--target table1`.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=16))]
    pub row: u64,
    #[command(flatten)]
    pub search: SearchArgs,
}

/// Rendered output and exit code of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub exit: i32,
}

struct Ctx {
    format: Format,
    digits: usize,
    cfg: QuadratureConfig,
}

impl Ctx {
    fn num(&self, x: f64) -> String {
        format_significant(x, self.digits)
    }
}

/// Pretty JSON with keys in sorted order, so that parsing and re-emitting is the identity.
pub fn canonical_json<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("output serialises");
    let mut s = serde_json::to_string_pretty(&value).expect("value serialises");
    s.push('\n');
    s
}

/// Parse `args` (program name first), run the command and write its output.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(r) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &r.text).map_err(Error::from),
                None => out.write_all(r.text.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => r.exit,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Run a parsed command.
pub fn execute(cli: &Cli) -> Result<Rendered> {
    let mut cfg = QuadratureConfig::default();
    if cli.rel_tol.is_some() || cli.abs_tol.is_some() {
        cfg = cfg.with_tolerances(
            cli.rel_tol.unwrap_or(cfg.rel_tol),
            cli.abs_tol.unwrap_or(cfg.abs_tol),
        );
        cfg.validate()?;
    }
    let ctx = Ctx {
        format: cli.format,
        digits: cli.digits as usize,
        cfg,
    };
    let dispatch = || match &cli.command {
        Command::Table1(a) => cmd_table1(a, &ctx),
        Command::Moment(a) => cmd_moment(a, &ctx),
        Command::Verify(a) => cmd_verify(a, &ctx),
        Command::Optimize(a) => cmd_optimize(a, &ctx),
    };
    match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))?
            .install(dispatch),
        None => dispatch(),
    }
}

fn exit_for(pass: bool) -> i32 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn pct(x: f64) -> String {
    format!("{:+.3}%", 100.0 * x)
}

#[derive(Serialize)]
struct OptimizedRow {
    row: usize,
    result: OptResult,
    comparison: RowComparison,
}

fn cmd_table1(a: &Table1Args, ctx: &Ctx) -> Result<Rendered> {
    let indices: Vec<usize> = match a.row {
        Some(r) => vec![r as usize],
        None => (1..=16).collect(),
    };
    let rows: Vec<RowComparison> = indices
        .par_iter()
        .map(|&i| compare_row(i, &ctx.cfg))
        .collect::<Result<_>>()?;
    let mut pass = rows.iter().all(|r| r.within_tolerance());
    let mut optimized = Vec::new();
    if a.optimize {
        for &i in &indices {
            let mut settings = a.search.settings();
            if a.search.from_published {
                settings.starts.push(table1_published(i)?);
            }
            let result = optimize_table1(i, &settings, ctx.cfg)?;
            let x = &result.best_params;
            let tuned = Table1Row {
                d: x[0],
                kappa: x[1],
                delta: x[2],
                log10_a0: x[3],
                ..table1_row(i)?
            };
            let comparison = compare_with(i, tuned, &ctx.cfg)?;
            pass &= result.feasible;
            optimized.push(OptimizedRow {
                row: i,
                result,
                comparison,
            });
        }
    }
    let text = match ctx.format {
        Format::Json => canonical_json(&json!({
            "tolerance": TABLE1_TOLERANCE,
            "pass": pass,
            "rows": rows,
            "optimized": optimized,
        })),
        Format::Csv if a.optimize => {
            let tuned: Vec<RowComparison> = optimized.iter().map(|o| o.comparison).collect();
            table1_csv(&tuned, ctx.digits)
        }
        Format::Csv => table1_csv(&rows, ctx.digits),
        Format::Human => {
            let mut s = String::new();
            for r in &rows {
                let p = r.row.published();
                let q = r.recomputed.as_array();
                s.push_str(&format!(
                    "row {:>2}  sigma in [{}, {}]  B1 {} -> {} ({})  B2 {} -> {} ({})  B3 {} -> {} ({})  {}\n",
                    r.index,
                    ctx.num(r.row.sigma1),
                    ctx.num(r.row.sigma2),
                    ctx.num(p[0]),
                    ctx.num(q[0]),
                    pct(r.deviation[0]),
                    ctx.num(p[1]),
                    ctx.num(q[1]),
                    pct(r.deviation[1]),
                    ctx.num(p[2]),
                    ctx.num(q[2]),
                    pct(r.deviation[2]),
                    if r.within_tolerance() { "ok" } else { "OUT OF BAND" }
                ));
            }
            for o in &optimized {
                let c = &o.comparison;
                s.push_str(&format!(
                    "row {:>2} tuned  d {}  kappa {}  delta {}  log10 A0 {}  B1 {} ({} vs published)  B2 {}  B3 {}  {}\n",
                    o.row,
                    ctx.num(c.row.d),
                    ctx.num(c.row.kappa),
                    ctx.num(c.row.delta),
                    ctx.num(c.row.log10_a0),
                    ctx.num(c.recomputed.b1),
                    pct(c.deviation[0]),
                    ctx.num(c.recomputed.b2),
                    ctx.num(c.recomputed.b3),
                    if o.result.feasible { "feasible" } else { "INFEASIBLE" }
                ));
            }
            s.push_str(&format!(
                "tolerance {}: {}\n",
                pct(TABLE1_TOLERANCE),
                if pass { "pass" } else { "FAIL" }
            ));
            s
        }
    };
    Ok(Rendered {
        text,
        exit: exit_for(pass),
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
struct Quantity {
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    abs_err: Option<f64>,
}

fn default_moment_params(t: f64) -> MomentParams {
    let asym = MomentParams::asymptotic_set();
    if t >= asym.t0 {
        asym
    } else {
        MomentParams::half_power_set()
    }
}

fn cmd_moment(a: &MomentArgs, ctx: &Ctx) -> Result<Rendered> {
    let mut values: BTreeMap<String, Quantity> = BTreeMap::new();
    let mut checks: Vec<VerificationReport> = Vec::new();
    let mut notes: Vec<String> = Vec::new();
    let explicit = [a.k, a.a, a.b];
    if explicit.iter().any(|v| v.is_some()) && !a.numeric {
        return domain("--k, --a and --b need --numeric");
    }
    if a.params.is_some() && a.bound != Some(BoundKind::Theorem2) {
        return domain("--params only applies to --bound theorem2");
    }
    if a.numeric && (a.bound.is_none() || explicit.iter().any(|v| v.is_some())) {
        let (Some(k), Some(lo), Some(hi)) = (a.k, a.a, a.b) else {
            return domain("--numeric needs --k, --a and --b unless it cross-checks a --bound");
        };
        let m = moment_numeric(k, lo, hi, &ctx.cfg)?;
        values.insert(
            "k".into(),
            Quantity {
                value: k,
                abs_err: None,
            },
        );
        values.insert(
            "A".into(),
            Quantity {
                value: lo,
                abs_err: None,
            },
        );
        values.insert(
            "B".into(),
            Quantity {
                value: hi,
                abs_err: None,
            },
        );
        values.insert(
            "moment".into(),
            Quantity {
                value: m.value,
                abs_err: Some(m.abs_err),
            },
        );
    }
    if let Some(kind) = a.bound {
        let Some(t) = a.t else {
            return domain("--bound needs --T");
        };
        values.insert(
            "T".into(),
            Quantity {
                value: t,
                abs_err: None,
            },
        );
        let cross = a.numeric && t <= CROSS_CHECK_MAX_T;
        if a.numeric && !cross {
            notes.push(format!("cross-check skipped: T > {CROSS_CHECK_MAX_T:e}"));
        }
        let inputs = [("T", t)];
        let mut exact = |name: &str, v: f64| {
            values.insert(
                name.into(),
                Quantity {
                    value: v,
                    abs_err: None,
                },
            );
        };
        match kind {
            BoundKind::Upper4 | BoundKind::Asymp | BoundKind::Lower => {
                let fb = corollary2_bounds(t)?;
                let bound = match kind {
                    BoundKind::Upper4 => fb.upper_half_power,
                    BoundKind::Asymp => fb
                        .upper_asymptotic
                        .ok_or_else(|| Error::Domain("asymptotic bounds need T >= 1e5".into()))?,
                    _ => fb
                        .lower_asymptotic
                        .ok_or_else(|| Error::Domain("asymptotic bounds need T >= 1e5".into()))?,
                };
                let name = match kind {
                    BoundKind::Upper4 => "upper_half_power",
                    BoundKind::Asymp => "upper_asymptotic",
                    _ => "lower_asymptotic",
                };
                exact(name, bound);
                if cross {
                    let m = moment_numeric(2.0, 0.0, t, &ctx.cfg)?;
                    values.insert(
                        "moment_0_T".into(),
                        Quantity {
                            value: m.value,
                            abs_err: Some(m.abs_err),
                        },
                    );
                    checks.push(if kind == BoundKind::Lower {
                        VerificationReport::upper(name, &inputs, bound, m.lo())
                    } else {
                        VerificationReport::upper(name, &inputs, m.hi(), bound)
                    });
                }
            }
            BoundKind::Third => exact("third_moment_coefficient", third_moment_coeff(t)?),
            BoundKind::Theorem2 => {
                let base = default_moment_params(t);
                let p = match &a.params {
                    Some(path) => {
                        let text = std::fs::read_to_string(path).map_err(Error::from)?;
                        moment_params_from(&parse_key_values(&text)?, base)?
                    }
                    None => base,
                };
                let m = moment_constants(&p, &ctx.cfg)?;
                let o = theorem2_interval(t, &p, &m)?;
                exact("T0", p.t0);
                exact("F1", m.f1);
                exact("center", o.interval.value);
                exact("radius", o.interval.abs_err);
                exact("interval_lower", o.interval.lo());
                exact("interval_upper", o.interval.hi());
                exact("upper", o.upper);
                if cross {
                    let n: Bracket = moment_numeric(2.0, t, 2.0 * t, &ctx.cfg)?;
                    values.insert(
                        "moment_T_2T".into(),
                        Quantity {
                            value: n.value,
                            abs_err: Some(n.abs_err),
                        },
                    );
                    checks.push(VerificationReport::upper(
                        "interval_lower",
                        &inputs,
                        o.interval.lo(),
                        n.lo(),
                    ));
                    checks.push(VerificationReport::upper(
                        "interval_upper",
                        &inputs,
                        n.hi(),
                        o.interval.hi(),
                    ));
                    checks.push(VerificationReport::upper("upper", &inputs, n.hi(), o.upper));
                }
            }
        }
    }
    if values.is_empty() {
        return domain("moment needs --numeric or --bound");
    }
    let pass = checks.iter().all(|c| c.holds);
    let text = match ctx.format {
        Format::Json => {
            canonical_json(&json!({ "values": values, "checks": checks, "pass": pass }))
        }
        Format::Csv => {
            let mut s = String::from("quantity,value,abs_err\n");
            for (k, q) in &values {
                let err = q.abs_err.map(|e| ctx.num(e)).unwrap_or_default();
                s.push_str(&format!("{k},{},{err}\n", ctx.num(q.value)));
            }
            s
        }
        Format::Human => {
            let mut s = String::new();
            for (k, q) in &values {
                match q.abs_err {
                    Some(e) => {
                        s.push_str(&format!("{k} = {} ± {}\n", ctx.num(q.value), ctx.num(e)))
                    }
                    None => s.push_str(&format!("{k} = {}\n", ctx.num(q.value))),
                }
            }
            for c in &checks {
                s.push_str(&format!(
                    "check {}: {} <= {}  {}\n",
                    c.check,
                    ctx.num(c.lhs),
                    ctx.num(c.rhs),
                    if c.holds { "holds" } else { "FAILS" }
                ));
            }
            for n in &notes {
                s.push_str(&format!("{n}\n"));
            }
            s
        }
    };
    Ok(Rendered {
        text,
        exit: exit_for(pass),
    })
}

fn cmd_verify(a: &VerifyArgs, ctx: &Ctx) -> Result<Rendered> {
    let opts = match a.samples {
        Some(n) => SuiteOptions::with_samples(n as usize, a.seed),
        None => SuiteOptions {
            seed: a.seed,
            ..SuiteOptions::default()
        },
    };
    let reports = run_suite(a.suite, &opts, &ctx.cfg)?;
    let pass = reports.iter().all(|r| r.holds);
    let text = match ctx.format {
        Format::Json => reports.iter().map(|r| r.to_json_line() + "\n").collect(),
        Format::Csv => {
            let mut s = String::from("check,holds,lhs,rhs,margin,inputs\n");
            for r in &reports {
                let inputs: Vec<String> = r
                    .inputs
                    .iter()
                    .map(|(k, v)| format!("{k}={}", ctx.num(*v)))
                    .collect();
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.check,
                    r.holds,
                    ctx.num(r.lhs),
                    ctx.num(r.rhs),
                    ctx.num(r.margin),
                    inputs.join(";")
                ));
            }
            s
        }
        Format::Human => {
            let mut tally: BTreeMap<&str, (usize, usize, f64)> = BTreeMap::new();
            for r in &reports {
                let e = tally
                    .entry(r.check.as_str())
                    .or_insert((0, 0, f64::INFINITY));
                e.0 += 1;
                e.1 += usize::from(!r.holds);
                e.2 = e.2.min(r.margin);
            }
            let mut s = String::new();
            for (check, (n, failed, margin)) in &tally {
                s.push_str(&format!(
                    "{check}: {n} checks, {failed} failed, smallest margin {}\n",
                    ctx.num(*margin)
                ));
            }
            for r in reports.iter().filter(|r| !r.holds) {
                s.push_str(&format!("FAILED {}\n", r.to_json_line()));
            }
            s.push_str(&format!(
                "{} checks, {}\n",
                reports.len(),
                if pass { "all hold" } else { "FAILURES" }
            ));
            s
        }
    };
    Ok(Rendered {
        text,
        exit: exit_for(pass),
    })
}

fn cmd_optimize(a: &OptimizeArgs, ctx: &Ctx) -> Result<Rendered> {
    let mut settings = a.search.settings();
    let (name, result) = match a.target {
        Target::Table1 => {
            let row = a.row as usize;
            if a.search.from_published {
                settings.starts.push(table1_published(row)?);
            }
            (
                format!("table1 row {row}"),
                optimize_table1(row, &settings, ctx.cfg)?,
            )
        }
        Target::C1 => {
            if a.search.from_published {
                settings.starts.push(c1_published());
            }
            (
                "c1".to_string(),
                random_multistart(&c1_problem(ctx.cfg)?.with_settings(&settings))?,
            )
        }
        Target::F1 => {
            if a.search.from_published {
                settings.starts.push(f1_published());
            }
            (
                "f1".to_string(),
                random_multistart(&f1_problem(ctx.cfg)?.with_settings(&settings))?,
            )
        }
    };
    let text = match ctx.format {
        Format::Json => canonical_json(&result),
        Format::Csv => {
            let mut s = String::from("name,value\n");
            for (k, v) in result.names.iter().zip(&result.best_params) {
                s.push_str(&format!("{k},{}\n", ctx.num(*v)));
            }
            s.push_str(&format!("objective,{}\n", ctx.num(result.best_value)));
            s
        }
        Format::Human => {
            let mut s = format!(
                "{name}: objective {} ({}, {} evaluations)\n",
                ctx.num(result.best_value),
                if result.feasible {
                    "feasible"
                } else {
                    "INFEASIBLE"
                },
                result.evaluations
            );
            for (k, v) in result.names.iter().zip(&result.best_params) {
                s.push_str(&format!("  {k} = {}\n", ctx.num(*v)));
            }
            for (k, v) in &result.breakdown {
                s.push_str(&format!("  [{k}] {}\n", ctx.num(*v)));
            }
            s
        }
    };
    Ok(Rendered {
        text,
        exit: exit_for(result.feasible),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["explicit-ingham"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&[]).0, EXIT_USAGE);
        assert_eq!(call(&["table1"]).0, EXIT_USAGE);
        assert_eq!(call(&["table1", "--row", "17"]).0, EXIT_USAGE);
        assert_eq!(call(&["table1", "--row", "1", "--all"]).0, EXIT_USAGE);
        assert_eq!(call(&["table1", "--row", "1", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["moment"]).0, EXIT_USAGE);
        assert_eq!(call(&["moment", "--numeric", "--k", "2"]).0, EXIT_USAGE);
        assert_eq!(
            call(&["moment", "--bound", "asymp", "--T", "3000"]).0,
            EXIT_USAGE
        );
        assert_eq!(
            call(&["moment", "--bound", "upper4", "--T", "100"]).0,
            EXIT_USAGE
        );
        assert_eq!(call(&["verify"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn table1_row_one() {
        let (code, out, _) = call(&["table1", "--row", "1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("B1 5.36000 -> 5.35908"), "{out}");
        let (code, out, _) = call(&["table1", "--all", "--format", "csv", "--digits", "4"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines.len(), 17);
        assert!(lines.iter().all(|l| l.split(',').count() == 10));
    }

    #[test]
    fn json_round_trips() {
        let (code, out, _) = call(&["table1", "--row", "2", "--format", "json"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(canonical_json(&v), out);
        let (_, out, _) = call(&[
            "moment", "--bound", "third", "--T", "1e5", "--format", "json",
        ]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(canonical_json(&v), out);
        assert!(
            (v["values"]["third_moment_coefficient"]["value"]
                .as_f64()
                .unwrap()
                - 4.689)
                .abs()
                < 1e-3
        );
    }

    #[test]
    fn moment_trivial_and_bounds() {
        let (code, out, _) = call(&[
            "moment",
            "--numeric",
            "--k",
            "2",
            "--a",
            "5",
            "--b",
            "5",
            "--format",
            "csv",
        ]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("moment,0,"), "{out}");
        let (code, out, _) = call(&[
            "moment", "--bound", "theorem2", "--T", "2e5", "--format", "json",
        ]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["values"]["F1"]["value"].as_f64().unwrap() <= 48.801);
    }

    #[test]
    fn params_file_is_read() {
        let dir = std::env::temp_dir().join(format!("explicit-ingham-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("p.txt");
        std::fs::write(&path, render_moment_params(&MomentParams::asymptotic_set())).unwrap();
        let p = path.to_str().unwrap();
        let (code, out, err) = call(&[
            "moment", "--bound", "theorem2", "--T", "2e5", "--params", p, "--format", "json",
        ]);
        assert_eq!(code, EXIT_OK, "{err}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!((v["values"]["F1"]["value"].as_f64().unwrap() - 48.8004118009787).abs() < 1e-9);
        std::fs::write(&path, "T0 = 1e5\nc1 = 0.3\n").unwrap();
        assert_eq!(
            call(&["moment", "--bound", "theorem2", "--T", "2e5", "--params", p]).0,
            EXIT_USAGE
        );
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn verify_stream_is_ndjson() {
        let (code, out, _) = call(&[
            "verify",
            "--suite",
            "gamma-chi",
            "--samples",
            "5",
            "--seed",
            "1",
            "--format",
            "json",
        ]);
        assert_eq!(code, EXIT_OK);
        for line in out.lines() {
            let r: VerificationReport = serde_json::from_str(line).unwrap();
            assert!(r.holds);
            assert_eq!(r.to_json_line(), line);
        }
        let again = call(&[
            "verify",
            "--suite",
            "gamma-chi",
            "--samples",
            "5",
            "--seed",
            "1",
            "--format",
            "json",
        ])
        .1;
        assert_eq!(out, again);
    }

    #[test]
    fn optimize_c1_with_threads() {
        let args = [
            "optimize",
            "--target",
            "c1",
            "--trials",
            "4",
            "--samples",
            "10",
            "--format",
            "json",
        ];
        let (code, one, _) = call(&[&args[..], &["--threads", "1"]].concat());
        assert_eq!(code, EXIT_OK);
        let (_, two, _) = call(&[&args[..], &["--threads", "2"]].concat());
        assert_eq!(one, two);
        let r: Value = serde_json::from_str(&one).unwrap();
        assert!(r["feasible"].as_bool().unwrap());
    }
}
