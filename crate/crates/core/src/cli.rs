//! Command-line front end.
//!
//! Exit codes: 0 for a definitive answer (determined or does-not-exist),
//! 2 inconclusive, 3 non-isolated zero, 4 parse, domain or configuration error.

use crate::mlim::{mlim_run, LimitMode, MlimConfig, MlimError, MlimResult, Status};
use crate::polyalg::rat::{fmt_rat, parse_rat};
use crate::polyalg::{var_list, ExtReal, Finite, Rat, Real};
use crate::ratlimit::{Bound, Certainty, Certificate, EngineMode, NumericParams, ZeroOutcome};
use crate::series::{parse_expr, FunKind, SeriesError};
use clap::{Parser, ValueEnum};
use serde_json::{json, Value};
use std::fmt::Write as _;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_NON_ISOLATED: i32 = 3;
pub const EXIT_ERROR: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Lim,
    Liminf,
    Limsup,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    ExactOnly,
    NumericAllowed,
}

/// Limit, lower limit and upper limit of g/h at a point, for real analytic g and h.
#[derive(Clone, Debug, Parser)]
#[command(name = "mlim", version)]
pub struct CliArgs {
    /// Numerator expression g
    #[arg(long)]
    pub num: String,
    /// Denominator expression h
    #[arg(long)]
    pub den: String,
    /// Comma-separated variable names, in order
    #[arg(long, value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
    /// Comma-separated rational coordinates of the point (default: origin)
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
    pub engine: EngineArg,
    /// Largest truncation degree d tried
    #[arg(long, default_value_t = 12)]
    pub max_degree: u32,
    /// First truncation degree tried
    #[arg(long, default_value_t = 2)]
    pub start_degree: u32,
    /// Seed of the numeric tier
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest sphere radius of the numeric tier
    #[arg(long, default_value_t = 0.1)]
    pub r0: f64,
    /// Ratio between consecutive radii
    #[arg(long, default_value_t = 0.5)]
    pub gamma: f64,
    /// Number of radii
    #[arg(long, default_value_t = 13)]
    pub radii: usize,
    /// Multistarts per radius
    #[arg(long, default_value_t = 64)]
    pub starts: usize,
    /// Iteration cap of each local climb
    #[arg(long, default_value_t = 200)]
    pub max_iter: usize,
    /// Trend ratio threshold
    #[arg(long, default_value_t = 0.7)]
    pub tau: f64,
    /// Relative floor below which a denominator sample is discarded
    #[arg(long, default_value_t = 1e-9)]
    pub eps: f64,
    /// Cap on Puiseux series deepening
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
    /// Print the per-degree trace, tiers and witnesses
    #[arg(short, long, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

/// Rendered outcome of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn failure(msg: String) -> CliOutput {
    CliOutput { code: EXIT_ERROR, stdout: String::new(), stderr: msg }
}

fn caret(label: &str, text: &str, pos: usize) -> String {
    let col = text.char_indices().take_while(|(i, _)| *i < pos).count();
    format!("  {}: {}\n  {}{}^\n", label, text, " ".repeat(label.len() + 2), " ".repeat(col))
}

fn validate_vars(vars: &[String]) -> Result<(), String> {
    if vars.is_empty() {
        return Err("at least one variable is required".into());
    }
    for (i, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(format!("'{}' is not a valid variable name", v));
        }
        if FunKind::from_name(v).is_some() {
            return Err(format!("'{}' is a function name", v));
        }
        if vars[..i].contains(v) {
            return Err(format!("variable '{}' listed twice", v));
        }
    }
    Ok(())
}

fn parse_point(text: Option<&str>, n: usize) -> Result<Vec<Rat>, String> {
    let Some(text) = text else { return Ok(vec![Rat::from_integer(0.into()); n]) };
    let pt: Vec<Rat> = text
        .split(',')
        .map(|s| parse_rat(s).ok_or_else(|| format!("'{}' is not a rational number", s.trim())))
        .collect::<Result<_, _>>()?;
    if pt.len() != n {
        return Err(format!("point has {} coordinates but there are {} variables", pt.len(), n));
    }
    Ok(pt)
}

impl CliArgs {
    pub fn config(&self) -> MlimConfig {
        MlimConfig {
            mode: match self.mode {
                ModeArg::Lim => LimitMode::Lim,
                ModeArg::Liminf => LimitMode::Liminf,
                ModeArg::Limsup => LimitMode::Limsup,
                ModeArg::Both => LimitMode::Both,
            },
            d_max: self.max_degree,
            start_degree: self.start_degree,
            engine: match self.engine {
                EngineArg::Auto => EngineMode::Auto,
                EngineArg::ExactOnly => EngineMode::ExactOnly,
                EngineArg::NumericAllowed => EngineMode::NumericAllowed,
            },
            numeric: NumericParams {
                r0: self.r0,
                gamma: self.gamma,
                radii: self.radii,
                starts: self.starts,
                max_iter: self.max_iter,
                seed: self.seed,
                tau: self.tau,
                eps: self.eps,
            },
            n_max: self.n_max,
        }
    }
}

/// Parses, runs and renders.
pub fn run_cli(args: &CliArgs) -> CliOutput {
    if let Err(e) = validate_vars(&args.vars) {
        return failure(format!("error: {}\n", e));
    }
    let point = match parse_point(args.point.as_deref(), args.vars.len()) {
        Ok(p) => p,
        Err(e) => return failure(format!("error: {}\n", e)),
    };
    let g = match parse_expr(&args.num, &args.vars) {
        Ok(e) => e,
        Err(e) => return failure(format!("error: numerator: {}\n{}", e, caret("--num", &args.num, e.pos))),
    };
    let h = match parse_expr(&args.den, &args.vars) {
        Ok(e) => e,
        Err(e) => return failure(format!("error: denominator: {}\n{}", e, caret("--den", &args.den, e.pos))),
    };
    let vars = var_list(&args.vars);
    let r = match mlim_run(&g, &h, &vars, &point, &args.config()) {
        Ok(r) => r,
        Err(MlimError::Series(SeriesError::Parse(e))) => return failure(format!("error: {}\n", e)),
        Err(e) => return failure(format!("error: {}\n", e)),
    };
    let code = exit_code(r.status);
    let stdout = if args.json { format_json(&r, &args.vars) } else { format_text(&r, &args.vars, args.verbose) };
    CliOutput { code, stdout, stderr: String::new() }
}

/// Entry point taking raw process arguments.
pub fn main_with_args<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match CliArgs::try_parse_from(argv) {
        Ok(args) => run_cli(&args),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                failure(text)
            } else {
                CliOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn exit_code(s: Status) -> i32 {
    match s {
        Status::Determined | Status::DoesNotExist => EXIT_OK,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
        Status::NonIsolatedZeroDetected => EXIT_NON_ISOLATED,
    }
}

fn finite_or_null(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

fn exact_json(v: &ExtReal) -> Value {
    match v {
        ExtReal::NegInf => json!("-inf"),
        ExtReal::PosInf => json!("inf"),
        ExtReal::Finite(Finite::Exact(Real::Rat(r))) => json!(fmt_rat(r)),
        ExtReal::Finite(Finite::Exact(Real::Alg(a))) => {
            let (lo, hi) = a.interval();
            json!({"alg": {"minpoly": a.poly().fmt_var("t"), "interval": [fmt_rat(lo), fmt_rat(hi)]}})
        }
        ExtReal::Finite(Finite::Approx { value, .. }) => finite_or_null(*value),
    }
}

/// Exact bounds render as a string or algebraic-number object; numeric
/// bounds wrap their value with the error estimate.
pub fn bound_json(b: &Option<Bound>) -> Value {
    match b {
        None => Value::Null,
        Some(Bound { value, certainty: Certainty::Exact }) => exact_json(value),
        Some(Bound { value, certainty: Certainty::Numeric { error } }) => json!({"value": exact_json(value), "error": finite_or_null(*error)}),
    }
}

fn outcome_name(o: ZeroOutcome) -> &'static str {
    match o {
        ZeroOutcome::IsZero => "is_zero",
        ZeroOutcome::NotZero => "not_zero",
        ZeroOutcome::Unknown => "unknown",
    }
}

pub fn describe_certificate(c: &Certificate, vars: &[String]) -> String {
    match c {
        Certificate::None => "none".into(),
        Certificate::Monomial { sign, exps } => {
            let parts: Vec<String> = exps.iter().zip(vars).map(|(a, v)| format!("{}^{}", v, 2 * a)).collect();
            format!("{}Q >= c*({}) near 0", if *sign < 0 { "-" } else { "" }, parts.join(" + "))
        }
        Certificate::Axis { var } => format!("Q vanishes on the {}-axis", vars[*var]),
        Certificate::Quadratic { class } => format!("quadratic lowest form, {}", class),
        Certificate::Bivariate { lower, upper } => format!("exact bounds of s_d/Q: [{}, {}]", lower, upper),
        Certificate::NonIsolated => "Q has a real zero curve through the origin".into(),
        Certificate::Trend { maxima, .. } => {
            let tail: Vec<String> = maxima.iter().rev().take(4).rev().map(|m| format!("{:.3e}", m)).collect();
            format!("max |s_d/Q| on the last spheres: {}", tail.join(", "))
        }
        Certificate::Valuation { num, den } => format!("valuations {} (s_d) and {} (Q)", num, den),
    }
}

/// Stable JSON rendering; deterministic for identical inputs and seed.
pub fn format_json(r: &MlimResult, vars: &[String]) -> String {
    let step2: Vec<Value> = r
        .diagnostics
        .step2
        .iter()
        .map(|s| match &s.result {
            Some(z) => json!({
                "d": s.d,
                "outcome": outcome_name(z.outcome),
                "certainty": z.certainty.label(),
                "tier": z.tier.map(|t| t.name()),
                "certificate": describe_certificate(&z.certificate, vars),
                "note": s.note,
            }),
            None => json!({"d": s.d, "outcome": Value::Null, "certainty": Value::Null, "tier": Value::Null, "certificate": Value::Null, "note": s.note}),
        })
        .collect();
    let tiers: Vec<&str> = r.diagnostics.tiers.iter().map(|t| t.name()).collect();
    let witnesses: Vec<Value> = r.diagnostics.witnesses.iter().map(|w| json!({"kind": w.kind, "detail": w.detail})).collect();
    let v = json!({
        "status": r.status.name(),
        "mode": r.mode.name(),
        "lower": bound_json(&r.lower),
        "upper": bound_json(&r.upper),
        "limit": bound_json(&r.limit),
        "certainty": r.certainty().map(|c| c.label()),
        "degree_used": r.degree_used,
        "diagnostics": {"step2": step2, "tiers": tiers, "witnesses": witnesses},
        "seed": r.seed,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn value_text(v: &ExtReal) -> String {
    match v {
        ExtReal::Finite(Finite::Approx { value, .. }) => format!("{}", value),
        _ => v.to_string(),
    }
}

fn bound_text(b: &Bound, d: Option<u32>) -> String {
    let d = d.map(|d| format!(", d={}", d)).unwrap_or_default();
    match b.certainty {
        Certainty::Exact => format!("{} (exact{})", value_text(&b.value), d),
        Certainty::Numeric { error } => format!("{} (numeric +/- {:.1e}{})", value_text(&b.value), error, d),
    }
}

pub fn format_text(r: &MlimResult, vars: &[String], verbose: u8) -> String {
    let mut out = String::new();
    let d = r.degree_used;
    match r.status {
        Status::Determined => {
            if let Some(b) = &r.limit {
                let _ = writeln!(out, "limit = {}", bound_text(b, d));
            }
            if r.mode != LimitMode::Lim {
                if let Some(b) = &r.lower {
                    let _ = writeln!(out, "liminf = {}", bound_text(b, d));
                }
                if let Some(b) = &r.upper {
                    let _ = writeln!(out, "limsup = {}", bound_text(b, d));
                }
            }
        }
        Status::DoesNotExist => {
            let _ = writeln!(out, "limit does not exist");
            if let (Some(l), Some(u)) = (&r.lower, &r.upper) {
                let _ = writeln!(out, "liminf = {}", bound_text(l, d));
                let _ = writeln!(out, "limsup = {}", bound_text(u, d));
            }
        }
        Status::NonIsolatedZeroDetected => {
            let _ = writeln!(out, "the zero of the denominator at the point is not isolated");
            for w in r.diagnostics.witnesses.iter().filter(|w| w.kind == "zero_branch" || w.kind == "sign_change") {
                let _ = writeln!(out, "  {}", w.detail);
            }
        }
        Status::Inconclusive => {
            let _ = writeln!(out, "inconclusive (exit code {})", EXIT_INCONCLUSIVE);
            for w in r.diagnostics.witnesses.iter().filter(|w| w.kind == "engine_error") {
                let _ = writeln!(out, "  {}", w.detail);
            }
        }
    }
    if verbose > 0 {
        let _ = writeln!(out, "seed = {}", r.seed);
        for s in &r.diagnostics.step2 {
            match &s.result {
                Some(z) => {
                    let tier = z.tier.map(|t| t.name()).unwrap_or("none");
                    let _ = writeln!(out, "d={}: {} ({}, {}): {}", s.d, outcome_name(z.outcome), z.certainty.label(), tier, describe_certificate(&z.certificate, vars));
                }
                None => {
                    let _ = writeln!(out, "d={}: skipped: {}", s.d, s.note.as_deref().unwrap_or(""));
                }
            }
        }
        if !r.diagnostics.tiers.is_empty() {
            let names: Vec<&str> = r.diagnostics.tiers.iter().map(|t| t.name()).collect();
            let _ = writeln!(out, "tiers: {}", names.join(", "));
        }
        for w in &r.diagnostics.witnesses {
            let _ = writeln!(out, "{}: {}", w.kind, w.detail);
        }
        let _ = writeln!(out, "elapsed: {:.3} s", r.diagnostics.elapsed.as_secs_f64());
    }
    out
}
