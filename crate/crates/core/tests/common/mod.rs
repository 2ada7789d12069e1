#![allow(dead_code)]

use mlim::cli::main_with_args;
use mlim::polyalg::rat::rat_to_f64;
use mlim::polyalg::{var_list, ExtReal, MPoly, Monomial, Rat, VarList};
use mlim::ratlimit::{liminf_limsup, numeric_estimate, Bound, EngineConfig, LimitVerdict, NumericParams};
use mlim::series::eval::apply_fun;
use mlim::series::{eval_numeric, parse_expr, parse_polynomial, taylor, Expr};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

pub fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

pub fn poly(text: &str, vars: &[&str]) -> MPoly {
    parse_polynomial(text, vars).unwrap_or_else(|| panic!("not a polynomial: {}", text))
}

pub fn rat(s: &str) -> Rat {
    mlim::polyalg::rat::parse_rat(s).unwrap()
}

pub fn ext(s: &str) -> ExtReal {
    match s {
        "inf" => ExtReal::PosInf,
        "-inf" => ExtReal::NegInf,
        _ => ExtReal::rat(rat(s)),
    }
}

pub fn bound_is(b: &Option<Bound>, v: &str) -> bool {
    b.as_ref().is_some_and(|b| b.value.exactly_equals(&ext(v)))
}

// ---------------------------------------------------------------- series

/// Twenty analytic expressions, including every numerator and denominator of
/// the reference examples.
pub const SERIES_CORPUS: [(&str, &[&str]); 20] = [
    ("sin(x^2+y^2+z^2)", &["x", "y", "z"]),
    ("3-cos(x)-cos(y)-cos(z)", &["x", "y", "z"]),
    ("sin(x*y)", &["x", "y"]),
    ("cos(x)+cos(y)-2", &["x", "y"]),
    ("exp(sin(x^2+y^4+z^6))-1", &["x", "y", "z"]),
    ("sqrt(cos(x)-sin(y^2)-z^4)-1", &["x", "y", "z"]),
    ("x^4+(x-y^2)^2", &["x", "y"]),
    ("y^4+(y-x^2)^2-x^6-y^6", &["x", "y"]),
    ("exp(x)*cos(y)", &["x", "y"]),
    ("log(1+x+y^2)", &["x", "y"]),
    ("atan(x-y)", &["x", "y"]),
    ("asin(x*y+z)/(1+x)", &["x", "y", "z"]),
    ("tan(x+y)", &["x", "y"]),
    ("sinh(x)*cosh(y)", &["x", "y"]),
    ("tanh(x^2-y)", &["x", "y"]),
    ("sqrt(1+x)*exp(-y)", &["x", "y"]),
    ("1/(1-x-y)", &["x", "y"]),
    ("(1+x)^5*sin(y)", &["x", "y"]),
    ("log(cos(x))", &["x"]),
    ("exp(x*y*z)-cos(x+z)", &["x", "y", "z"]),
];

/// `truncate(taylor(e, d2), d1) == taylor(e, d1)` for `d1 <= d2 <= 8`.
pub fn truncation_coherence_failures() -> Vec<String> {
    let mut out = Vec::new();
    for (text, vs) in SERIES_CORPUS {
        let n = names(vs);
        let vars = var_list(&n);
        let e = parse_expr(text, &n).unwrap();
        let full: Vec<MPoly> = (0..=8).map(|d| taylor(&e, &vars, d).unwrap()).collect();
        for d2 in 0..=8 {
            for d1 in 0..=d2 {
                if full[d2].truncate(d1 as u32) != full[d1] {
                    out.push(format!("{}: truncate(T{}, {}) != T{}", text, d2, d1, d1));
                }
            }
        }
    }
    out
}

fn random_point(rng: &mut ChaCha8Rng, n: usize, radius: f64) -> Vec<f64> {
    loop {
        let g: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm > 1e-3 {
            return g.iter().map(|v| v * radius / norm).collect();
        }
    }
}

/// Value of `e` at `u` together with a bound on the magnitudes of the
/// intermediate quantities, so that `64 * eps * magnitude` bounds the
/// floating-point error of the evaluation.
pub fn eval_with_magnitude(e: &Expr, u: &[f64]) -> (f64, f64) {
    match e {
        Expr::Const(c) => (rat_to_f64(c), rat_to_f64(c).abs()),
        Expr::Var(i) => (u[*i], u[*i].abs()),
        Expr::Add(v) => v.iter().map(|x| eval_with_magnitude(x, u)).fold((0.0, 0.0), |(a, m), (b, n)| (a + b, m + n)),
        Expr::Mul(v) => v.iter().map(|x| eval_with_magnitude(x, u)).fold((1.0, 1.0), |(a, m), (b, n)| (a * b, m * n)),
        Expr::Neg(x) => {
            let (a, m) = eval_with_magnitude(x, u);
            (-a, m)
        }
        Expr::Div(a, b) => {
            let ((va, ma), (vb, mb)) = (eval_with_magnitude(a, u), eval_with_magnitude(b, u));
            (va / vb, ma / vb.abs() + va.abs() * mb / (vb * vb))
        }
        Expr::IntPow(x, k) => {
            let (a, m) = eval_with_magnitude(x, u);
            (a.powi(*k as i32), m.powi(*k as i32) * (*k as f64).max(1.0))
        }
        Expr::Fun(f, x) => {
            let (a, m) = eval_with_magnitude(x, u);
            let v = apply_fun(*f, a).unwrap();
            let h = 1e-6 * a.abs().max(1.0);
            let slope = ((apply_fun(*f, a + h).unwrap() - apply_fun(*f, a - h).unwrap()) / (2.0 * h)).abs();
            (v, v.abs() + slope * m)
        }
    }
}

/// Remainder order: `|e(u) - T_d e(u)| / |u|^(d+1)` stays bounded when `|u|`
/// is halved. Each of 200 seeded points has `|u|` log-uniform in
/// `[1e-3, 1e-1]` and is compared with `u/2`. The comparison allows the
/// floating-point error bound of the smaller point, which dominates the
/// remainder at the smallest radii when `d` is large.
pub fn remainder_order_failures() -> Vec<String> {
    remainder_order_failures_with(0)
}

/// Same check with the expansion deliberately truncated `drop` degrees too
/// early; used to confirm the check has teeth.
pub fn remainder_order_failures_with(drop: u32) -> Vec<String> {
    let mut out = Vec::new();
    let eps = f64::EPSILON;
    for (k, (text, vs)) in SERIES_CORPUS.iter().enumerate() {
        let n = names(vs);
        let vars = var_list(&n);
        let e = parse_expr(text, &n).unwrap();
        for d in [3u32, 5, 7] {
            let t = taylor(&e, &vars, d - drop).unwrap();
            let abs_t = MPoly::from_terms(vars.clone(), t.terms().map(|(m, c)| (m.exps().to_vec(), num_traits::Signed::abs(c))));
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * k as u64 + d as u64);
            let mut big = 0f64;
            let mut halves = Vec::with_capacity(200);
            for _ in 0..200 {
                let r = 10f64.powf(rng.gen_range(-3.0..-1.0));
                let u = random_point(&mut rng, n.len(), r);
                let ratio = |u: &[f64]| -> (f64, f64) {
                    let f = eval_numeric(&e, &vars, u).unwrap();
                    let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt().powi(d as i32 + 1);
                    let rem = (f - t.eval_f64(u)).abs() / norm;
                    let (_, mag) = eval_with_magnitude(&e, u);
                    let round = 64.0 * eps * (mag + abs_t.eval_f64(&u.iter().map(|v| v.abs()).collect::<Vec<_>>())) / norm;
                    (rem, round)
                };
                let (rb, _) = ratio(&u);
                let half: Vec<f64> = u.iter().map(|v| v / 2.0).collect();
                let (rs, slack) = ratio(&half);
                if !rb.is_finite() || !rs.is_finite() {
                    out.push(format!("{} d={}: non-finite ratio", text, d));
                }
                big = big.max(rb);
                halves.push((rs, slack));
            }
            // each half-radius ratio is compared with the largest full-radius
            // ratio, allowing that point's own rounding bound
            if let Some((rs, sl)) = halves.iter().find(|(rs, sl)| *rs > 2.0 * big + 1e-9 + sl) {
                out.push(format!("{} d={}: ratio {:.3e} (rounding {:.1e}) at half radius vs max {:.3e}", text, d, rs, sl, big));
            }
        }
    }
    out
}

// ------------------------------------------------------- bivariate corpora

fn random_rat(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    let mut v = 0;
    while v == 0 {
        v = rng.gen_range(lo..=hi);
    }
    Rat::from_integer(v.into())
}

/// A random denominator with a monomial certificate: `a x^2i + b y^2j`
/// plus optionally a positive even cross term.
fn certified_denominator(rng: &mut ChaCha8Rng, vars: &VarList) -> (MPoly, u32, u32) {
    let i = rng.gen_range(1..=2u32);
    let j = rng.gen_range(1..=2u32);
    let mut q = MPoly::zero(vars.clone());
    q.add_term(Monomial::new(vec![2 * i, 0]), random_rat(rng, 1, 3));
    q.add_term(Monomial::new(vec![0, 2 * j]), random_rat(rng, 1, 3));
    if rng.gen_bool(0.4) {
        q.add_term(Monomial::new(vec![2, 2]), random_rat(rng, 1, 2));
    }
    (q, i, j)
}

/// Random numerator whose terms have weighted degree at least `min_w`
/// relative to the pure powers `x^2i`, `y^2j`.
fn weighted_numerator(rng: &mut ChaCha8Rng, vars: &VarList, i: u32, j: u32, min_w: f64) -> MPoly {
    let mut p = MPoly::zero(vars.clone());
    let terms = rng.gen_range(1..=3);
    while p.num_terms() < terms {
        let a = rng.gen_range(0..=4u32);
        let b = rng.gen_range(0..=4u32);
        let w = a as f64 / (2 * i) as f64 + b as f64 / (2 * j) as f64;
        if a + b == 0 || w < min_w || w > 1.6 {
            continue;
        }
        p.add_term(Monomial::new(vec![a, b]), random_rat(rng, -3, 3));
    }
    p
}

/// Fifty seeded pairs `(P, Q)` in two variables with certified denominators.
/// Most have finite bounds; every tenth pair has a numerator of lower weight.
pub fn cross_engine_corpus() -> Vec<(MPoly, MPoly)> {
    let vars = var_list(&["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    (0..50)
        .map(|k| {
            let (q, i, j) = certified_denominator(&mut rng, &vars);
            let min_w = if k % 10 == 9 { 0.5 } else { 1.0 };
            (weighted_numerator(&mut rng, &vars, i, j, min_w), q)
        })
        .collect()
}

pub struct CrossEngine {
    pub pass: usize,
    pub lines: Vec<String>,
}

fn agrees(exact: &ExtReal, num: &Bound) -> bool {
    match (exact, &num.value) {
        (ExtReal::NegInf, ExtReal::NegInf) | (ExtReal::PosInf, ExtReal::PosInf) => true,
        (ExtReal::Finite(_), ExtReal::Finite(_)) => (exact.to_f64() - num.value.to_f64()).abs() <= 3.0 * num.certainty.error(),
        _ => false,
    }
}

/// Exact bivariate bounds against the numeric estimator on the corpus.
pub fn cross_engine() -> CrossEngine {
    let mut pass = 0;
    let mut lines = Vec::new();
    for (k, (p, q)) in cross_engine_corpus().iter().enumerate() {
        let exact = liminf_limsup(p, q, &EngineConfig::default()).expect("exact engine");
        assert!(exact.is_exact());
        let num = numeric_estimate(p, q, &NumericParams { seed: k as u64, ..Default::default() });
        let (el, eu) = (exact.lower.unwrap().value, exact.upper.unwrap().value);
        match num {
            Ok(v) => {
                let (nl, nu) = (v.lower.unwrap(), v.upper.unwrap());
                if agrees(&el, &nl) && agrees(&eu, &nu) {
                    pass += 1;
                } else {
                    lines.push(format!("pair {} ({}) / ({}): exact [{}, {}], numeric [{}, {}]", k, p, q, el, eu, nl.value, nu.value));
                }
            }
            Err(e) => lines.push(format!("pair {} ({}) / ({}): numeric degenerate: {}", k, p, q, e)),
        }
    }
    CrossEngine { pass, lines }
}

/// Seeded exact-tier instances for the duality, scaling and permutation checks.
pub fn invariant_instances(count: usize) -> Vec<(MPoly, MPoly)> {
    let vars = var_list(&["x", "y"]);
    let uni = var_list(&["x"]);
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    (0..count)
        .map(|k| {
            if k % 8 == 7 {
                let mut p = MPoly::zero(uni.clone());
                let mut q = MPoly::zero(uni.clone());
                p.add_term(Monomial::new(vec![rng.gen_range(0..=5)]), random_rat(&mut rng, -4, 4));
                q.add_term(Monomial::new(vec![rng.gen_range(1..=5)]), random_rat(&mut rng, -4, 4));
                q.add_term(Monomial::new(vec![6]), random_rat(&mut rng, -4, 4));
                (p, q)
            } else {
                let (q, i, j) = certified_denominator(&mut rng, &vars);
                let q = if rng.gen_bool(0.3) { q.scale(&Rat::from_integer((-1).into())) } else { q };
                (weighted_numerator(&mut rng, &vars, i, j, 0.5), q)
            }
        })
        .collect()
}

fn same(a: &Option<Bound>, b: &ExtReal) -> bool {
    a.as_ref().is_some_and(|x| x.value.exactly_equals(b))
}

fn bounds(v: &LimitVerdict) -> (ExtReal, ExtReal) {
    (v.lower.clone().unwrap().value, v.upper.clone().unwrap().value)
}

/// Checks one instance; returns a description of every violated property.
pub fn invariant_violations(p: &MPoly, q: &MPoly) -> Vec<String> {
    let cfg = EngineConfig::default();
    let mut out = Vec::new();
    let base = match liminf_limsup(p, q, &cfg) {
        Ok(v) => v,
        Err(e) => return vec![format!("({}) / ({}): {}", p, q, e)],
    };
    let (lo, hi) = bounds(&base);
    if !base.is_exact() {
        out.push(format!("({}) / ({}): not exact", p, q));
    }
    if lo.cmp_ext(&hi) == Some(std::cmp::Ordering::Greater) {
        out.push(format!("({}) / ({}): lower {} > upper {}", p, q, lo, hi));
    }
    let neg = liminf_limsup(&p.scale(&Rat::from_integer((-1).into())), q, &cfg).unwrap();
    if !(same(&neg.lower, &hi.neg()) && same(&neg.upper, &lo.neg())) {
        out.push(format!("({}) / ({}): duality", p, q));
    }
    for c in [Rat::new(1.into(), 3.into()), Rat::from_integer(2.into()), Rat::new(7.into(), 5.into())] {
        let s = liminf_limsup(&p.scale(&c), q, &cfg).unwrap();
        if !(same(&s.lower, &lo.scale_pos(&c)) && same(&s.upper, &hi.scale_pos(&c))) {
            out.push(format!("({}) / ({}): scaling by {}", p, q, c));
        }
    }
    if p.nvars() == 2 {
        let perm = [1, 0];
        let (pp, qq) = (p.permute(&perm, p.vars().clone()), q.permute(&perm, q.vars().clone()));
        let s = liminf_limsup(&pp, &qq, &cfg).unwrap();
        if !(same(&s.lower, &lo) && same(&s.upper, &hi)) {
            out.push(format!("({}) / ({}): permutation", p, q));
        }
    }
    out
}

pub fn invariant_failures(count: usize) -> Vec<String> {
    invariant_instances(count).iter().flat_map(|(p, q)| invariant_violations(p, q)).collect()
}

// ------------------------------------------------------------- json / cli

/// Invocations covering every status, exact and numeric values, and
/// algebraic bounds.
pub const JSON_SUITE: [&[&str]; 7] = [
    &["--num", "sin(x^2+y^2+z^2)", "--den", "3-cos(x)-cos(y)-cos(z)", "--vars", "x,y,z", "--mode", "lim"],
    &["--num", "sin(x*y)", "--den", "cos(x)+cos(y)-2", "--vars", "x,y"],
    &["--num", "exp(sin(x^2+y^4+z^6))-1", "--den", "sqrt(cos(x)-sin(y^2)-z^4)-1", "--vars", "x,y,z"],
    &["--num", "1", "--den", "y^4+(y-x^2)^2-x^6-y^6", "--vars", "x,y"],
    &["--num", "x^2+x*y", "--den", "x^2+y^2", "--vars", "x,y", "--mode", "limsup"],
    &["--num", "x*y*z", "--den", "x^2+y^2+z^2+x*y", "--vars", "x,y,z", "--seed", "7"],
    &["--num", "x", "--den", "x^4+(x-y^2)^2", "--vars", "x,y", "--max-degree", "3"],
];

pub fn run_json(args: &[&str]) -> (i32, String) {
    let argv: Vec<&str> = std::iter::once("mlim").chain(args.iter().copied()).chain(std::iter::once("--json")).collect();
    let out = main_with_args(argv);
    (out.code, out.stdout)
}

/// Runs the JSON suite twice and compares the output byte for byte.
pub fn determinism_mismatches() -> Vec<String> {
    let first: Vec<(i32, String)> = JSON_SUITE.iter().map(|a| run_json(a)).collect();
    let second: Vec<(i32, String)> = JSON_SUITE.iter().map(|a| run_json(a)).collect();
    first
        .iter()
        .zip(&second)
        .zip(JSON_SUITE)
        .filter(|((a, b), _)| a != b)
        .map(|(_, args)| args.join(" "))
        .collect()
}

pub fn load_schema() -> Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/result.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "null" => v.is_null(),
        "boolean" => v.is_boolean(),
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_i64() || v.is_u64(),
        _ => false,
    }
}

/// Validates `v` against the subset of JSON Schema used by the result schema:
/// `type`, `enum`, `properties`, `required`, `additionalProperties: false`,
/// `items`, `minItems`, `maxItems`, `minimum`, `oneOf` and local `$ref`.
pub fn validate(v: &Value, schema: &Value, root: &Value, path: &str) -> Result<(), String> {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let target = r.strip_prefix("#/").ok_or(format!("{}: unsupported $ref {}", path, r))?;
        let mut s = root;
        for part in target.split('/') {
            s = s.get(part).ok_or(format!("{}: dangling $ref {}", path, r))?;
        }
        return validate(v, s, root, path);
    }
    if let Some(t) = schema.get("type") {
        let ok = match t {
            Value::String(t) => type_matches(t, v),
            Value::Array(ts) => ts.iter().any(|t| t.as_str().is_some_and(|t| type_matches(t, v))),
            _ => false,
        };
        if !ok {
            return Err(format!("{}: expected type {}, got {}", path, t, v));
        }
    }
    if let Some(e) = schema.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            return Err(format!("{}: {} not in {:?}", path, v, e));
        }
    }
    if let Some(m) = schema.get("minimum").and_then(Value::as_f64) {
        if v.as_f64().is_some_and(|x| x < m) {
            return Err(format!("{}: {} below minimum {}", path, v, m));
        }
    }
    if let Some(alts) = schema.get("oneOf").and_then(Value::as_array) {
        let n = alts.iter().filter(|s| validate(v, s, root, path).is_ok()).count();
        if n != 1 {
            return Err(format!("{}: {} matches {} alternatives of oneOf", path, v, n));
        }
    }
    if let Some(obj) = v.as_object() {
        if let Some(req) = schema.get("required").and_then(Value::as_array) {
            for k in req.iter().filter_map(Value::as_str) {
                if !obj.contains_key(k) {
                    return Err(format!("{}: missing field {}", path, k));
                }
            }
        }
        let props = schema.get("properties").and_then(Value::as_object);
        for (k, x) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(s) => validate(x, s, root, &format!("{}.{}", path, k))?,
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    return Err(format!("{}: unexpected field {}", path, k));
                }
                None => {}
            }
        }
    }
    if let Some(arr) = v.as_array() {
        if let Some(n) = schema.get("minItems").and_then(Value::as_u64) {
            if (arr.len() as u64) < n {
                return Err(format!("{}: fewer than {} items", path, n));
            }
        }
        if let Some(n) = schema.get("maxItems").and_then(Value::as_u64) {
            if arr.len() as u64 > n {
                return Err(format!("{}: more than {} items", path, n));
            }
        }
        if let Some(s) = schema.get("items") {
            for (i, x) in arr.iter().enumerate() {
                validate(x, s, root, &format!("{}[{}]", path, i))?;
            }
        }
    }
    Ok(())
}

pub fn validate_result(text: &str) -> Result<Value, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let schema = load_schema();
    validate(&v, &schema, &schema, "$")?;
    Ok(v)
}

pub fn f64_of(r: &Rat) -> f64 {
    rat_to_f64(r)
}
