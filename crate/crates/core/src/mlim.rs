//! The MLIM driver: raise the truncation degree `d` until `s_d / T_{2d-1}h -> 0`,
//! then hand the truncated quotient to the rational-limit engine.

use crate::polyalg::{ExtReal, MPoly, Rat, VarList};
use crate::puiseux::{branch_expand, isolated_zero_2d, Side};
use crate::ratlimit::engine::describe_branch;
use crate::ratlimit::{
    liminf_limsup, Bound, Certainty, Certificate, EngineConfig, EngineMode, NumericParams, RatLimitError, Tier, Witness,
    ZeroOutcome, ZeroTestResult,
};
use crate::polyalg::bivar::squarefree_part;
use crate::series::{taylor, value_at_origin, Expr, SeriesError};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LimitMode {
    Lim,
    Liminf,
    Limsup,
    #[default]
    Both,
}

impl LimitMode {
    pub fn name(self) -> &'static str {
        match self {
            LimitMode::Lim => "lim",
            LimitMode::Liminf => "liminf",
            LimitMode::Limsup => "limsup",
            LimitMode::Both => "both",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MlimConfig {
    pub mode: LimitMode,
    pub d_max: u32,
    /// First degree tried; 2 unless forced higher.
    pub start_degree: u32,
    pub engine: EngineMode,
    pub numeric: NumericParams,
    pub n_max: Option<u32>,
}

impl Default for MlimConfig {
    fn default() -> Self {
        MlimConfig { mode: LimitMode::Both, d_max: 12, start_degree: 2, engine: EngineMode::Auto, numeric: NumericParams::default(), n_max: None }
    }
}

impl MlimConfig {
    pub fn validate(&self) -> Result<(), MlimError> {
        if self.d_max < 2 {
            return Err(MlimError::Config("maximum degree must be at least 2".into()));
        }
        if self.start_degree < 2 {
            return Err(MlimError::Config("starting degree must be at least 2".into()));
        }
        if self.n_max == Some(0) {
            return Err(MlimError::Config("branch deepening cap must be positive".into()));
        }
        self.numeric.validate().map_err(MlimError::Config)
    }

    fn engine_config(&self) -> EngineConfig {
        EngineConfig { mode: self.engine, numeric: self.numeric.clone(), n_max: self.n_max }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Determined,
    DoesNotExist,
    NonIsolatedZeroDetected,
    Inconclusive,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Determined => "determined",
            Status::DoesNotExist => "does_not_exist",
            Status::NonIsolatedZeroDetected => "non_isolated_zero",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Outcome of the zero-limit test at one degree.
#[derive(Clone, Debug)]
pub struct Step2Record {
    pub d: u32,
    /// `None` when `T_{2d-1}h` vanished identically and no test ran.
    pub result: Option<ZeroTestResult>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct Diagnostics {
    pub step2: Vec<Step2Record>,
    pub tiers: Vec<Tier>,
    pub witnesses: Vec<Witness>,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct MlimResult {
    pub status: Status,
    pub mode: LimitMode,
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
    pub limit: Option<Bound>,
    pub degree_used: Option<u32>,
    pub diagnostics: Diagnostics,
    pub seed: u64,
}

impl MlimResult {
    /// Certainty of the reported values: numeric if any of them is numeric.
    pub fn certainty(&self) -> Option<Certainty> {
        let reported: Vec<&Bound> = [&self.lower, &self.upper, &self.limit].into_iter().flatten().collect();
        if reported.is_empty() {
            return None;
        }
        let err = reported.iter().map(|b| b.certainty.error()).fold(0.0, f64::max);
        if reported.iter().all(|b| b.certainty.is_exact()) {
            Some(Certainty::Exact)
        } else {
            Some(Certainty::Numeric { error: err })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum MlimError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("point has {found} coordinates but there are {expected} variables")]
    PointDimension { expected: usize, found: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
}

/// Looks for `a`, `b` with `h_m(a) > 0 > h_m(b)`: the zero of any function
/// with lowest form `h_m` is then not isolated.
pub fn nonisolated_precheck(hm: &MPoly) -> Option<(Vec<Rat>, Vec<Rat>)> {
    let n = hm.nvars();
    let mut pos: Option<Vec<Rat>> = None;
    let mut neg: Option<Vec<Rat>> = None;
    let mut visit = |u: Vec<Rat>| {
        match hm.eval(&u).cmp(&Rat::zero()) {
            Ordering::Greater if pos.is_none() => pos = Some(u),
            Ordering::Less if neg.is_none() => neg = Some(u),
            _ => {}
        }
        pos.is_some() && neg.is_some()
    };
    for i in 0..n {
        for s in [1, -1] {
            let mut u = vec![Rat::zero(); n];
            u[i] = Rat::from_integer(s.into());
            if visit(u) {
                return Some((pos.unwrap(), neg.unwrap()));
            }
        }
    }
    // coordinates from {1, -1, 1/2, -1/2}; fall back to signs only in high dimension
    let choices: Vec<Rat> = if n <= 6 {
        vec![Rat::one(), -Rat::one(), Rat::new(1.into(), 2.into()), Rat::new((-1).into(), 2.into())]
    } else {
        vec![Rat::one(), -Rat::one()]
    };
    let k = choices.len();
    let total = (k as u64).saturating_pow(n as u32).min(1 << 16);
    for mut idx in 0..total {
        let mut u = Vec::with_capacity(n);
        for _ in 0..n {
            u.push(choices[(idx % k as u64) as usize].clone());
            idx /= k as u64;
        }
        if visit(u) {
            return Some((pos.unwrap(), neg.unwrap()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6c_696d);
    for _ in 0..100 {
        let u: Vec<Rat> = (0..n).map(|_| Rat::new(rng.gen_range(-16i64..=16).into(), rng.gen_range(1i64..=8).into())).collect();
        if visit(u) {
            return Some((pos.unwrap(), neg.unwrap()));
        }
    }
    None
}

fn fmt_point(u: &[Rat]) -> String {
    let parts: Vec<String> = u.iter().map(crate::polyalg::rat::fmt_rat).collect();
    format!("({})", parts.join(", "))
}

/// Real branches of a bivariate polynomial's zero set through the origin.
fn branch_witnesses(q: &MPoly, n_max: Option<u32>) -> Vec<Witness> {
    let vars: Vec<String> = q.vars().to_vec();
    let mut out = Vec::new();
    let r = squarefree_part(q);
    for i in 0..2 {
        if r.restrict_to_axis(i).is_zero() {
            out.push(Witness::new("zero_branch", format!("{} = 0", vars[1 - i])));
        }
    }
    for side in [Side::Pos, Side::Neg] {
        if let Ok(set) = branch_expand(&r, 8, side, n_max) {
            for b in set.branches.iter().filter(|b| b.order().is_some()) {
                out.push(Witness::new("zero_branch", describe_branch(&vars, b)));
            }
        }
    }
    out
}

/// Computes the limit, lower limit and/or upper limit of `g/h` at `c`.
pub fn mlim_run(g: &Expr, h: &Expr, vars: &VarList, c: &[Rat], cfg: &MlimConfig) -> Result<MlimResult, MlimError> {
    let start = Instant::now();
    cfg.validate()?;
    if c.len() != vars.len() {
        return Err(MlimError::PointDimension { expected: vars.len(), found: c.len() });
    }
    let (g, h) = (g.shift_point(c), h.shift_point(c));
    let mut diag = Diagnostics::default();
    let result = |status, verdict: Option<(Option<Bound>, Option<Bound>, Option<Bound>)>, d: Option<u32>, mut diag: Diagnostics| {
        diag.elapsed = start.elapsed();
        let (lower, upper, limit) = verdict.unwrap_or((None, None, None));
        MlimResult { status, mode: cfg.mode, lower, upper, limit, degree_used: d, diagnostics: diag, seed: cfg.numeric.seed }
    };

    let h0 = value_at_origin(&h, vars)?;
    if !h0.is_zero() {
        let v = value_at_origin(&g, vars)? / h0;
        diag.witnesses.push(Witness::new("continuity", "denominator does not vanish at the point"));
        let b = Bound::exact(ExtReal::rat(v));
        let (status, verdict) = assemble(cfg.mode, Some(b.clone()), Some(b));
        return Ok(result(status, Some(verdict), Some(0), diag));
    }
    // taylor of g is only needed once step 2 passes, but domain errors should surface early
    taylor(&g, vars, 0)?;
    let ecfg = cfg.engine_config();
    let h_degree = h.polynomial_degree();
    for d in cfg.start_degree..=cfg.d_max {
        let q = taylor(&h, vars, 2 * d - 1)?;
        if q.is_zero() {
            diag.step2.push(Step2Record { d, result: None, note: Some("truncated denominator is identically zero".into()) });
            continue;
        }
        let h_is_q = h_degree.is_some_and(|k| k <= 2 * d - 1);
        let (m, form) = q.lowest_form().expect("nonzero polynomial");
        if m <= 2 * d - 1 {
            if let Some((a, b)) = nonisolated_precheck(&form) {
                diag.step2.push(Step2Record { d, result: None, note: Some(format!("lowest form of degree {} changes sign", m)) });
                diag.witnesses.push(Witness::new("sign_change", format!("lowest form is positive at {} and negative at {}", fmt_point(&a), fmt_point(&b))));
                return Ok(result(Status::NonIsolatedZeroDetected, None, Some(d), diag));
            }
        }
        let z = crate::ratlimit::zero_limit_test(&q, d, &ecfg);
        let outcome = z.outcome;
        let nonisolated = z.certificate == Certificate::NonIsolated;
        diag.step2.push(Step2Record { d, result: Some(z), note: None });
        if nonisolated && h_is_q {
            diag.witnesses.extend(branch_witnesses(&q, cfg.n_max));
            return Ok(result(Status::NonIsolatedZeroDetected, None, Some(d), diag));
        }
        match outcome {
            ZeroOutcome::NotZero => continue,
            ZeroOutcome::Unknown if cfg.engine == EngineMode::ExactOnly => {
                return Ok(result(Status::Inconclusive, None, Some(d), diag));
            }
            ZeroOutcome::Unknown => continue,
            ZeroOutcome::IsZero => {}
        }
        let p = taylor(&g, vars, 2 * d - 1)?;
        let v = match liminf_limsup(&p, &q, &ecfg) {
            Ok(v) => v,
            Err(RatLimitError::NonIsolatedDenominator) => {
                if q.nvars() == 2 {
                    diag.witnesses.extend(branch_witnesses(&q, cfg.n_max));
                }
                return Ok(result(Status::NonIsolatedZeroDetected, None, Some(d), diag));
            }
            Err(e) => {
                diag.witnesses.push(Witness::new("engine_error", e.to_string()));
                return Ok(result(Status::Inconclusive, None, Some(d), diag));
            }
        };
        diag.tiers = v.tiers.clone();
        diag.witnesses.extend(v.witnesses.iter().cloned());
        let (status, verdict) = assemble(cfg.mode, v.lower, v.upper);
        return Ok(result(status, Some(verdict), Some(d), diag));
    }
    if q_is_nonisolated_polynomial(&h, vars, cfg) {
        return Ok(result(Status::NonIsolatedZeroDetected, None, None, diag));
    }
    Ok(result(Status::Inconclusive, None, None, diag))
}

/// A polynomial denominator whose exact zero set is known to be non-isolated
/// (checked once the loop is exhausted, for the record).
fn q_is_nonisolated_polynomial(h: &Expr, vars: &VarList, cfg: &MlimConfig) -> bool {
    let Some(k) = h.polynomial_degree() else { return false };
    if vars.len() != 2 || k > 2 * cfg.d_max - 1 {
        return false;
    }
    taylor(h, vars, k).ok().is_some_and(|q| !q.is_zero() && isolated_zero_2d(&q) == Ok(false))
}

type Reported = (Option<Bound>, Option<Bound>, Option<Bound>);

/// Turns a pair of bounds into the status and values reported for `mode`.
pub fn assemble(mode: LimitMode, lower: Option<Bound>, upper: Option<Bound>) -> (Status, Reported) {
    match mode {
        LimitMode::Liminf => match lower {
            Some(l) => (Status::Determined, (Some(l), None, None)),
            None => (Status::Inconclusive, (None, None, None)),
        },
        LimitMode::Limsup => match upper {
            Some(u) => (Status::Determined, (None, Some(u), None)),
            None => (Status::Inconclusive, (None, None, None)),
        },
        LimitMode::Both => {
            let limit = match (&lower, &upper) {
                (Some(l), Some(u)) if l.certainty.is_exact() && u.certainty.is_exact() && l.value.exactly_equals(&u.value) => Some(l.clone()),
                _ => None,
            };
            let status = if lower.is_some() && upper.is_some() { Status::Determined } else { Status::Inconclusive };
            (status, (lower, upper, limit))
        }
        LimitMode::Lim => {
            let (Some(l), Some(u)) = (lower.clone(), upper.clone()) else {
                return (Status::Inconclusive, (lower, upper, None));
            };
            if l.certainty.is_exact() && u.certainty.is_exact() {
                return if l.value.exactly_equals(&u.value) {
                    (Status::Determined, (Some(l.clone()), Some(u), Some(l)))
                } else {
                    (Status::DoesNotExist, (Some(l), Some(u), None))
                };
            }
            let (e1, e2) = (l.certainty.error(), u.certainty.error());
            match (&l.value, &u.value) {
                (ExtReal::NegInf, ExtReal::NegInf) | (ExtReal::PosInf, ExtReal::PosInf) => {
                    let lim = Bound::numeric(l.value.clone(), e1.max(e2));
                    (Status::Determined, (Some(l), Some(u), Some(lim)))
                }
                (ExtReal::Finite(_), ExtReal::Finite(_)) => {
                    let (a, b) = (l.value.to_f64(), u.value.to_f64());
                    let gap = (b - e2) - (a + e1);
                    if gap > e1.max(e2) {
                        (Status::DoesNotExist, (Some(l), Some(u), None))
                    } else {
                        let mid = (a + b) / 2.0;
                        let err = (b - a).abs() / 2.0 + e1.max(e2);
                        let lim = Bound::numeric(ExtReal::approx(mid, err), err);
                        (Status::Determined, (Some(l), Some(u), Some(lim)))
                    }
                }
                _ => (Status::DoesNotExist, (Some(l), Some(u), None)),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::{var_list, rat::parse_rat};
    use crate::series::parse_expr;

    fn run(g: &str, h: &str, names: &[&str], cfg: &MlimConfig) -> MlimResult {
        let v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let (g, h) = (parse_expr(g, &v).unwrap(), parse_expr(h, &v).unwrap());
        mlim_run(&g, &h, &var_list(&v), &vec![Rat::zero(); v.len()], cfg).unwrap()
    }

    fn lim() -> MlimConfig {
        MlimConfig { mode: LimitMode::Lim, ..Default::default() }
    }

    fn is(b: &Option<Bound>, v: &str) -> bool {
        b.as_ref().is_some_and(|b| b.value.exactly_equals(&ExtReal::rat(parse_rat(v).unwrap())))
    }

    #[test]
    fn precheck() {
        let v = var_list(&["x", "y"]);
        let q = &MPoly::var(v.clone(), 0).pow(2) - &MPoly::var(v.clone(), 1).pow(2);
        let (a, b) = nonisolated_precheck(&q).unwrap();
        assert_eq!((fmt_point(&a), fmt_point(&b)), ("(1, 0)".to_string(), "(0, 1)".to_string()));
        let q = &MPoly::var(v.clone(), 0).pow(2) + &MPoly::var(v.clone(), 1).pow(2);
        assert!(nonisolated_precheck(&q).is_none());
        assert!(nonisolated_precheck(&MPoly::var(v, 1).pow(2)).is_none());
    }

    #[test]
    fn constant_ratio_example() {
        let r = run("sin(x^2+y^2+z^2)", "3-cos(x)-cos(y)-cos(z)", &["x", "y", "z"], &lim());
        assert_eq!((r.status, r.degree_used), (Status::Determined, Some(2)));
        assert!(is(&r.limit, "2"));
        assert_eq!(r.certainty(), Some(Certainty::Exact));
    }

    #[test]
    fn nonexistent_limit() {
        let r = run("sin(x*y)", "cos(x)+cos(y)-2", &["x", "y"], &MlimConfig::default());
        assert_eq!((r.status, r.degree_used), (Status::Determined, Some(2)));
        assert!(is(&r.lower, "-1") && is(&r.upper, "1"));
        assert!(r.limit.is_none());
        let r = run("sin(x*y)", "cos(x)+cos(y)-2", &["x", "y"], &lim());
        assert_eq!(r.status, Status::DoesNotExist);
    }

    #[test]
    fn continuity_shortcut() {
        let r = run("1+x", "2+y", &["x", "y"], &lim());
        assert_eq!(r.status, Status::Determined);
        assert!(is(&r.limit, "1/2"));
    }

    #[test]
    fn shifted_point() {
        let v: Vec<String> = vec!["x".into(), "y".into()];
        let g = parse_expr("sin((x-1)*(y+2))", &v).unwrap();
        let h = parse_expr("cos(x-1)+cos(y+2)-2", &v).unwrap();
        let c = [parse_rat("1").unwrap(), parse_rat("-2").unwrap()];
        let r = mlim_run(&g, &h, &var_list(&v), &c, &MlimConfig::default()).unwrap();
        assert!(is(&r.lower, "-1") && is(&r.upper, "1"));
    }

    #[test]
    fn worked_example() {
        let r = run("exp(sin(x^2+y^4+z^6))-1", "sqrt(cos(x)-sin(y^2)-z^4)-1", &["x", "y", "z"], &MlimConfig::default());
        assert_eq!((r.status, r.degree_used), (Status::Determined, Some(3)));
        let s: Vec<ZeroOutcome> = r.diagnostics.step2.iter().map(|s| s.result.as_ref().unwrap().outcome).collect();
        assert_eq!(s, vec![ZeroOutcome::NotZero, ZeroOutcome::IsZero]);
        assert!(is(&r.lower, "-4") && is(&r.upper, "0"));
        assert!(r.upper.unwrap().certainty.is_exact());
    }

    #[test]
    fn ks_family() {
        let h = "x^4+(x-y^2)^2";
        let r = run(h, h, &["x", "y"], &lim());
        assert_eq!((r.status, r.degree_used), (Status::Determined, Some(5)));
        assert!(is(&r.limit, "1"));
        assert_eq!(r.diagnostics.step2.len(), 4);
    }

    #[test]
    fn non_isolated() {
        let r = run("1", "y^4+(y-x^2)^2-x^6-y^6", &["x", "y"], &MlimConfig::default());
        assert_eq!(r.status, Status::NonIsolatedZeroDetected);
        assert!(r.lower.is_none() && r.upper.is_none());
        assert!(r.diagnostics.witnesses.iter().any(|w| w.kind == "zero_branch"));
        let r = run("x", "x^2-y^2", &["x", "y"], &MlimConfig::default());
        assert_eq!(r.status, Status::NonIsolatedZeroDetected);
    }

    #[test]
    fn zero_denominator_exhausts() {
        let cfg = MlimConfig { d_max: 3, ..Default::default() };
        let r = run("x", "x-x", &["x"], &cfg);
        assert_eq!(r.status, Status::Inconclusive);
        assert_eq!(r.diagnostics.step2.len(), 2);
    }

    #[test]
    fn config_validation() {
        let v = var_list(&["x"]);
        let e = Expr::Var(0);
        let cfg = MlimConfig { d_max: 1, ..Default::default() };
        assert!(matches!(mlim_run(&e, &e, &v, &[Rat::zero()], &cfg), Err(MlimError::Config(_))));
        let cfg = MlimConfig::default();
        assert!(matches!(mlim_run(&e, &e, &v, &[], &cfg), Err(MlimError::PointDimension { .. })));
    }
}
