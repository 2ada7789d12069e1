use super::certs::{axis_vanishing, build_power_sum, monomial_certificate, sign_certificate};
use super::numeric::{numeric_estimate, sphere_scan};
use super::types::*;
use super::RatLimitError;
use crate::polyalg::bivar::{split_monomial_content, squarefree_part};
use crate::polyalg::{quadratic_definiteness, Definiteness, ExtReal, MPoly, Rat, UPoly};
use crate::puiseux::{branch_expand, isolated_zero_2d, limit_along_branch, PuiseuxBranch, Side};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Decides whether `s_d / Q -> 0` at the origin.
pub fn zero_limit_test(q: &MPoly, d: u32, cfg: &EngineConfig) -> ZeroTestResult {
    use ZeroOutcome::*;
    let n = q.nvars();
    if let Some(i) = axis_vanishing(q) {
        return ZeroTestResult::exact(NotZero, Certificate::Axis { var: i }, Tier::AxisVanishing);
    }
    if let Some((sign, exps)) = monomial_certificate(q) {
        let amax = exps.iter().copied().max().unwrap_or(0);
        // along the axis with the largest a_i the quotient behaves like u^(2d - 2a)
        let outcome = if d > amax { IsZero } else { NotZero };
        return ZeroTestResult::exact(outcome, Certificate::Monomial { sign, exps }, Tier::MonomialCertificate);
    }
    if let Ok((2, form)) = q.lowest_form() {
        if let Ok(class) = quadratic_definiteness(&form) {
            let label = format!("{:?}", class.class);
            if class.class.is_definite() {
                return ZeroTestResult::exact(IsZero, Certificate::Quadratic { class: label }, Tier::QuadraticForm);
            }
            if class.class == Definiteness::Indefinite {
                return ZeroTestResult::exact(NotZero, Certificate::Quadratic { class: label }, Tier::QuadraticForm);
            }
        }
    }
    let s = build_power_sum(q.vars(), d);
    if n == 1 {
        let vq = q.valuation_in(0);
        let outcome = if 2 * d > vq { IsZero } else { NotZero };
        return ZeroTestResult::exact(outcome, Certificate::Valuation { num: 2 * d, den: vq }, Tier::Univariate);
    }
    if n == 2 {
        match isolated_zero_2d(q) {
            Ok(false) => return ZeroTestResult::exact(NotZero, Certificate::NonIsolated, Tier::Bivariate),
            Ok(true) => match bivariate(&s, q, cfg.n_max) {
                Ok(v) => {
                    let zero = ExtReal::rat(Rat::zero());
                    let lo = v.lower.as_ref().unwrap().value.clone();
                    let hi = v.upper.as_ref().unwrap().value.clone();
                    let outcome = if lo.exactly_equals(&zero) && hi.exactly_equals(&zero) { IsZero } else { NotZero };
                    return ZeroTestResult::exact(outcome, Certificate::Bivariate { lower: lo.to_string(), upper: hi.to_string() }, Tier::Bivariate);
                }
                Err(_) if cfg.mode == EngineMode::NumericAllowed => {}
                Err(_) => return ZeroTestResult { outcome: Unknown, certainty: Certainty::Exact, certificate: Certificate::None, tier: Some(Tier::Bivariate) },
            },
            Err(_) if cfg.mode == EngineMode::NumericAllowed => {}
            Err(_) => return ZeroTestResult { outcome: Unknown, certainty: Certainty::Exact, certificate: Certificate::None, tier: Some(Tier::Bivariate) },
        }
    } else if cfg.mode == EngineMode::ExactOnly {
        return ZeroTestResult { outcome: Unknown, certainty: Certainty::Exact, certificate: Certificate::None, tier: None };
    }
    numeric_zero_test(&s, q, &cfg.numeric)
}

fn numeric_zero_test(s: &MPoly, q: &MPoly, params: &NumericParams) -> ZeroTestResult {
    let unknown = |certificate| ZeroTestResult { outcome: ZeroOutcome::Unknown, certainty: Certainty::Numeric { error: f64::INFINITY }, certificate, tier: Some(Tier::Numeric) };
    let Ok(scan) = sphere_scan(s, q, params) else {
        return unknown(Certificate::None);
    };
    let maxima: Vec<f64> = scan.mins.iter().zip(&scan.maxs).map(|(a, b)| a.abs().max(b.abs())).collect();
    let last = &maxima[maxima.len() - 4..];
    let ratios: Vec<f64> = last.windows(2).map(|w| w[1] / w[0]).collect();
    let certificate = Certificate::Trend { radii: scan.radii.clone(), maxima: maxima.clone() };
    let err = last[3];
    if ratios.iter().all(|r| *r <= params.tau) {
        ZeroTestResult { outcome: ZeroOutcome::IsZero, certainty: Certainty::Numeric { error: err }, certificate, tier: Some(Tier::Numeric) }
    } else if ratios.iter().all(|r| *r >= 1.0 / params.tau) {
        ZeroTestResult { outcome: ZeroOutcome::NotZero, certainty: Certainty::Numeric { error: err }, certificate, tier: Some(Tier::Numeric) }
    } else {
        unknown(certificate)
    }
}

/// The tangential critical curve of `P/Q` on circles around the origin.
#[derive(Clone, Debug)]
pub struct CriticalCurve {
    /// `W = y (Q P_x - P Q_x) - x (Q P_y - P Q_y)`.
    pub w: MPoly,
    /// Exponents of the monomial factor `x^a y^b` of `W`.
    pub content: Vec<u32>,
    /// `W / (x^a y^b)`.
    pub reduced: MPoly,
}

pub fn critical_curve(p: &MPoly, q: &MPoly) -> Result<CriticalCurve, RatLimitError> {
    assert_eq!(q.nvars(), 2, "critical curve needs two variables");
    let vars = q.vars().clone();
    let (x, y) = (MPoly::var(vars.clone(), 0), MPoly::var(vars, 1));
    let ax = &(q * &p.derivative(0)) - &(p * &q.derivative(0));
    let ay = &(q * &p.derivative(1)) - &(p * &q.derivative(1));
    let w = &(&y * &ax) - &(&x * &ay);
    if w.is_zero() {
        return Err(RatLimitError::WIdenticallyZero);
    }
    let (content, reduced) = split_monomial_content(&w);
    Ok(CriticalCurve { w, content, reduced })
}

/// Constant-ratio test: `P = lambda * Q` with `lambda` read off the leading terms.
fn constant_ratio(p: &MPoly, q: &MPoly) -> Option<Rat> {
    if p.is_zero() {
        return Some(Rat::zero());
    }
    let (m, c) = q.leading_term()?;
    let lambda = p.coeff(m) / c;
    (p - &q.scale(&lambda)).is_zero().then_some(lambda)
}

/// One-sided limit of `p/q` at 0 for univariate `p`, `q` (`q != 0`).
pub fn univariate_limit(p: &UPoly, q: &UPoly, side: Side) -> ExtReal {
    let Some(vp) = p.valuation() else { return ExtReal::rat(Rat::zero()) };
    let vq = q.valuation().expect("nonzero denominator");
    if vp > vq {
        return ExtReal::rat(Rat::zero());
    }
    let ratio = p.coeff(vp) / q.coeff(vq);
    if vp == vq {
        return ExtReal::rat(ratio);
    }
    let mut positive = ratio.is_positive();
    if side == Side::Neg && (vq - vp) % 2 == 1 {
        positive = !positive;
    }
    ExtReal::infinity(if positive { Ordering::Greater } else { Ordering::Less })
}

/// Exact limits of `P/Q` along both directions of each coordinate axis on
/// which `Q` does not vanish identically.
pub fn axis_probes(p: &MPoly, q: &MPoly) -> Vec<(usize, Side, ExtReal)> {
    let mut out = Vec::new();
    for i in 0..q.nvars() {
        let qi = q.restrict_to_axis(i);
        if qi.is_zero() {
            continue;
        }
        let pu = p.restrict_to_axis(i).to_upoly(i).expect("axis restriction");
        let qu = qi.to_upoly(i).expect("axis restriction");
        for side in [Side::Pos, Side::Neg] {
            out.push((i, side, univariate_limit(&pu, &qu, side)));
        }
    }
    out
}

fn side_label(s: Side) -> &'static str {
    match s {
        Side::Pos => "+",
        Side::Neg => "-",
    }
}

pub fn describe_axis(vars: &[String], i: usize, side: Side) -> String {
    format!("{} -> 0{} on the {}-axis", vars[i], side_label(side), vars[i])
}

pub fn describe_branch(vars: &[String], b: &PuiseuxBranch) -> String {
    let param = &vars[b.param_var()];
    let other = &vars[1 - b.param_var()];
    let terms = b.terms();
    let shown: Vec<&(Rat, crate::polyalg::Real)> = terms.iter().filter(|(_, c)| !c.is_zero()).take(6).collect();
    let mut body = String::new();
    for (k, (e, c)) in shown.iter().enumerate() {
        let (neg, mag) = match c.as_rat() {
            Some(r) => (r.is_negative(), crate::polyalg::rat::fmt_rat(&r.abs())),
            None => (c.sign() == Ordering::Less, format!("{:.6}", c.to_f64().abs())),
        };
        let pow = if e.is_integer() {
            if *e == Rat::from_integer(1.into()) { format!("|{}|", param) } else { format!("|{}|^{}", param, e) }
        } else {
            format!("|{}|^({})", param, crate::polyalg::rat::fmt_rat(e))
        };
        let term = if mag == "1" { pow } else { format!("{}*{}", mag, pow) };
        match (k, neg) {
            (0, true) => body.push_str(&format!("-{}", term)),
            (0, false) => body.push_str(&term),
            (_, true) => body.push_str(&format!(" - {}", term)),
            (_, false) => body.push_str(&format!(" + {}", term)),
        }
    }
    if body.is_empty() {
        body.push('0');
    }
    if !b.is_exact() || terms.iter().filter(|(_, c)| !c.is_zero()).count() > shown.len() {
        body.push_str(" + ...");
    }
    format!("{} = {} as {} -> 0{}", other, body, param, side_label(b.side()))
}

fn ext_min<'a>(a: &'a ExtReal, b: &'a ExtReal) -> bool {
    a.cmp_ext(b) == Some(Ordering::Less)
}

/// Exact bivariate tier: extremes over limits along the axes and along the
/// real branches of the critical curve.
pub fn bivariate(p: &MPoly, q: &MPoly, n_max: Option<u32>) -> Result<LimitVerdict, RatLimitError> {
    if !isolated_zero_2d(q)? {
        return Err(RatLimitError::NonIsolatedDenominator);
    }
    let vars: Vec<String> = q.vars().to_vec();
    let mut cands: Vec<(String, PuiseuxBranch)> = Vec::new();
    match critical_curve(p, q) {
        Err(RatLimitError::WIdenticallyZero) => {
            cands.push((describe_axis(&vars, 0, Side::Pos), PuiseuxBranch::axis(0, Side::Pos)));
        }
        Err(e) => return Err(e),
        Ok(cc) => {
            for i in 0..2 {
                for side in [Side::Pos, Side::Neg] {
                    cands.push((describe_axis(&vars, i, side), PuiseuxBranch::axis(i, side)));
                }
            }
            let r = squarefree_part(&cc.reduced);
            if r.constant_term().is_zero() && !r.is_zero() {
                for side in [Side::Pos, Side::Neg] {
                    for b in branch_expand(&r, 1, side, n_max)?.branches {
                        cands.push((describe_branch(&vars, &b), b));
                    }
                }
            }
        }
    }
    if let Some(n) = n_max {
        for (_, b) in cands.iter_mut() {
            b.set_n_max(n);
        }
    }
    let mut lo: Option<(ExtReal, String)> = None;
    let mut hi: Option<(ExtReal, String)> = None;
    for (desc, b) in &cands {
        let v = limit_along_branch(p, q, b)?;
        if lo.as_ref().is_none_or(|(l, _)| ext_min(&v, l)) {
            lo = Some((v.clone(), desc.clone()));
        }
        if hi.as_ref().is_none_or(|(h, _)| ext_min(h, &v)) {
            hi = Some((v, desc.clone()));
        }
    }
    let (lo, lo_w) = lo.expect("at least one candidate");
    let (hi, hi_w) = hi.expect("at least one candidate");
    let mut v = LimitVerdict::both_exact(lo.clone(), hi.clone(), Tier::Bivariate);
    v.witnesses.push(Witness::new("lower", format!("{} along {}", lo, lo_w)));
    v.witnesses.push(Witness::new("upper", format!("{} along {}", hi, hi_w)));
    Ok(v)
}

/// Lower and upper limits of `P/Q` at the origin.
pub fn liminf_limsup(p: &MPoly, q: &MPoly, cfg: &EngineConfig) -> Result<LimitVerdict, RatLimitError> {
    if q.is_zero() {
        return Err(RatLimitError::ZeroDenominator);
    }
    if let Some(lambda) = constant_ratio(p, q) {
        let v = ExtReal::rat(lambda.clone());
        let mut out = LimitVerdict::both_exact(v.clone(), v, Tier::ConstantRatio);
        out.witnesses.push(Witness::new("identity", format!("P = {} * Q", crate::polyalg::rat::fmt_rat(&lambda))));
        return Ok(out);
    }
    let n = q.nvars();
    if n == 1 {
        let pu = p.to_upoly(0).expect("univariate");
        let qu = q.to_upoly(0).expect("univariate");
        let a = univariate_limit(&pu, &qu, Side::Pos);
        let b = univariate_limit(&pu, &qu, Side::Neg);
        let (lo, hi) = if ext_min(&b, &a) { (b, a) } else { (a, b) };
        let mut v = LimitVerdict::both_exact(lo, hi, Tier::Univariate);
        v.tiers.insert(0, Tier::ConstantRatio);
        return Ok(v);
    }
    if n == 2 {
        return match bivariate(p, q, cfg.n_max) {
            Ok(mut v) => {
                v.tiers.insert(0, Tier::ConstantRatio);
                Ok(v)
            }
            Err(RatLimitError::Puiseux(e)) if cfg.mode == EngineMode::NumericAllowed => {
                let mut v = numeric_estimate(p, q, &cfg.numeric)?;
                v.tiers = vec![Tier::ConstantRatio, Tier::Bivariate, Tier::Numeric];
                v.witnesses.push(Witness::new("fallback", format!("exact bivariate tier gave up: {}", e)));
                Ok(v)
            }
            Err(e) => Err(e),
        };
    }
    many_variables(p, q, cfg)
}

fn many_variables(p: &MPoly, q: &MPoly, cfg: &EngineConfig) -> Result<LimitVerdict, RatLimitError> {
    let vars: Vec<String> = q.vars().to_vec();
    let mut v = LimitVerdict { lower: None, upper: None, tiers: vec![Tier::ConstantRatio], witnesses: Vec::new() };
    let zero = ExtReal::rat(Rat::zero());
    // sign bound: P of constant sign, Q dominated by pure powers of constant sign
    let probes = axis_probes(p, q);
    v.tiers.push(Tier::SignCertificate);
    if let (Some(sp), Some((sq, _))) = (sign_certificate(p), monomial_certificate(q)) {
        let s = sp * sq;
        if let Some((i, side, _)) = probes.iter().find(|(_, _, val)| val.exactly_equals(&zero)) {
            let w = Witness::new(if s > 0 { "lower" } else { "upper" }, format!("0 along {} (quotient has constant sign {})", describe_axis(&vars, *i, *side), if s > 0 { "+" } else { "-" }));
            v.witnesses.push(w);
            if s > 0 {
                v.lower = Some(Bound::exact(zero.clone()));
            } else {
                v.upper = Some(Bound::exact(zero.clone()));
            }
        }
    }
    v.tiers.push(Tier::AxisProbe);
    let min_probe = probes.iter().min_by(|a, b| a.2.cmp_ext(&b.2).unwrap_or(Ordering::Equal));
    let max_probe = probes.iter().max_by(|a, b| a.2.cmp_ext(&b.2).unwrap_or(Ordering::Equal));
    if v.lower.is_some() && v.upper.is_some() {
        return Ok(v);
    }
    if cfg.mode == EngineMode::ExactOnly {
        return Ok(v);
    }
    v.tiers.push(Tier::Numeric);
    let num = numeric_estimate(p, q, &cfg.numeric)?;
    v.witnesses.extend(num.witnesses.iter().cloned());
    if v.lower.is_none() {
        let b = num.lower.clone().unwrap();
        v.lower = Some(snap(b, min_probe, true, &vars, &mut v.witnesses));
    }
    if v.upper.is_none() {
        let b = num.upper.clone().unwrap();
        v.upper = Some(snap(b, max_probe, false, &vars, &mut v.witnesses));
    }
    Ok(v)
}

/// Replaces a numeric bound by the exact axis-probe value when they agree
/// within `1e-2` or when the probe is already beyond it (the probe is a
/// valid one-sided bound). Certainty stays numeric.
fn snap(b: Bound, probe: Option<&(usize, Side, ExtReal)>, lower: bool, vars: &[String], witnesses: &mut Vec<Witness>) -> Bound {
    let Some((i, side, pv)) = probe else { return b };
    let err = b.certainty.error();
    let beyond = if lower { ext_min(pv, &b.value) } else { ext_min(&b.value, pv) };
    let close = b.value.is_finite() && pv.is_finite() && (b.value.to_f64() - pv.to_f64()).abs() <= 1e-2;
    if close || (beyond && !matches!(b.value, ExtReal::NegInf | ExtReal::PosInf)) {
        witnesses.push(Witness::new(
            if lower { "lower" } else { "upper" },
            format!("{} along {} (matches numeric estimate {})", pv, describe_axis(vars, *i, *side), b.value),
        ));
        return Bound::numeric(pv.clone(), err.max((b.value.to_f64() - pv.to_f64()).abs()).max(1e-9));
    }
    b
}
