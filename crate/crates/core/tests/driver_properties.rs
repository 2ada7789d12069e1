mod common;

use common::*;
use mlim::mlim::{mlim_run, LimitMode, MlimConfig, MlimResult, Status};
use mlim::polyalg::{var_list, Rat};
use mlim::ratlimit::Bound;
use mlim::series::parse_expr;

fn run_at(g: &str, h: &str, vs: &[&str], c: &[Rat], cfg: &MlimConfig) -> MlimResult {
    let n = names(vs);
    let (g, h) = (parse_expr(g, &n).unwrap(), parse_expr(h, &n).unwrap());
    mlim_run(&g, &h, &var_list(&n), c, cfg).unwrap()
}

fn run(g: &str, h: &str, vs: &[&str], cfg: &MlimConfig) -> MlimResult {
    run_at(g, h, vs, &vec![Rat::from_integer(0.into()); vs.len()], cfg)
}

const XY: &[&str] = &["x", "y"];
const XYZ: &[&str] = &["x", "y", "z"];

/// Quotients with isolated denominator zeros.
const CORPUS: [(&str, &str, &[&str]); 8] = [
    ("sin(x^2+y^2+z^2)", "3-cos(x)-cos(y)-cos(z)", XYZ),
    ("sin(x*y)", "cos(x)+cos(y)-2", XY),
    ("exp(sin(x^2+y^4+z^6))-1", "sqrt(cos(x)-sin(y^2)-z^4)-1", XYZ),
    ("x^4+(x-y^2)^2", "x^4+(x-y^2)^2", XY),
    ("x^2*y", "x^4+y^2", XY),
    ("sin(x)^2-y^2", "x^2+sinh(y)^2", XY),
    ("1-cos(x*y)", "x^4+y^4", XY),
    ("log(1+x^3)", "x^2+y^2", XY),
];

fn close(a: &Option<Bound>, b: &Option<Bound>) -> bool {
    match (a, b) {
        (None, None) => true,
        (Some(a), Some(b)) if a.certainty.is_exact() && b.certainty.is_exact() => a.value.exactly_equals(&b.value),
        (Some(a), Some(b)) => {
            let tol = a.certainty.error() + b.certainty.error() + 1e-6;
            a.value.exactly_equals(&b.value) || (a.value.is_finite() && b.value.is_finite() && (a.value.to_f64() - b.value.to_f64()).abs() <= tol)
        }
        _ => false,
    }
}

fn same_verdict(a: &MlimResult, b: &MlimResult) -> bool {
    a.status == b.status && close(&a.lower, &b.lower) && close(&a.upper, &b.upper) && close(&a.limit, &b.limit)
}

#[test]
fn degree_stability() {
    for (g, h, vs) in CORPUS.iter().filter(|c| c.2.len() == 2) {
        let r = run(g, h, vs, &MlimConfig::default());
        let d0 = r.degree_used.unwrap();
        assert!(r.lower.as_ref().unwrap().certainty.is_exact(), "{} / {}", g, h);
        let again = run(g, h, vs, &MlimConfig { start_degree: d0 + 1, ..Default::default() });
        assert!(same_verdict(&r, &again), "{} / {}: {:?} vs {:?}", g, h, r.lower, again.lower);
    }
}

#[test]
fn unit_factor_invariance() {
    for (g, h, vs) in CORPUS {
        let r = run(g, h, vs, &MlimConfig::default());
        let (gu, hu) = (format!("exp(x)*({})", g), format!("exp(x)*({})", h));
        let u = run(&gu, &hu, vs, &MlimConfig::default());
        assert!(same_verdict(&r, &u), "{} / {}: ({:?}, {:?}) vs ({:?}, {:?})", g, h, r.lower, r.upper, u.lower, u.upper);
    }
}

#[test]
fn mode_coherence() {
    for (g, h, vs) in CORPUS {
        let both = run(g, h, vs, &MlimConfig::default());
        let lim = run(g, h, vs, &MlimConfig { mode: LimitMode::Lim, ..Default::default() });
        let equal_exact = both.limit.is_some();
        assert_eq!(lim.status == Status::Determined && lim.limit.as_ref().unwrap().certainty.is_exact(), equal_exact, "{} / {}", g, h);
        if equal_exact {
            assert!(close(&lim.limit, &both.limit));
        }
        let inf = run(g, h, vs, &MlimConfig { mode: LimitMode::Liminf, ..Default::default() });
        let sup = run(g, h, vs, &MlimConfig { mode: LimitMode::Limsup, ..Default::default() });
        assert!(close(&inf.lower, &both.lower) && close(&sup.upper, &both.upper));
        assert!(inf.upper.is_none() && sup.lower.is_none());
    }
}

#[test]
fn shift_coherence() {
    let c = [rat("1/2"), rat("-1")];
    let cases = [
        ("sin(x*y)", "cos(x)+cos(y)-2", "sin((x-1/2)*(y+1))", "cos(x-1/2)+cos(y+1)-2"),
        ("x^2*y", "x^4+y^2", "(x-1/2)^2*(y+1)", "(x-1/2)^4+(y+1)^2"),
        ("1-cos(x*y)", "x^4+y^4", "1-cos((x-1/2)*(y+1))", "(2*x-1)^4/16+(y+1)^4"),
    ];
    for (g0, h0, g, h) in cases {
        let at_origin = run(g0, h0, XY, &MlimConfig::default());
        let at_c = run_at(g, h, XY, &c, &MlimConfig::default());
        assert!(same_verdict(&at_origin, &at_c), "{} / {}", g, h);
        assert_eq!(at_origin.degree_used, at_c.degree_used);
    }
}

#[test]
fn diagnostics_list_each_degree_once() {
    let extra = [("x", "x^4+(x-y^2)^2", XY), ("1", "y^4+(y-x^2)^2-x^6-y^6", XY)];
    for (g, h, vs) in CORPUS.iter().copied().chain(extra) {
        for start in [2, 3] {
            let r = run(g, h, vs, &MlimConfig { start_degree: start, d_max: 6, ..Default::default() });
            let ds: Vec<u32> = r.diagnostics.step2.iter().map(|s| s.d).collect();
            let expected: Vec<u32> = (start..start + ds.len() as u32).collect();
            assert_eq!(ds, expected, "{} / {}", g, h);
            if let Some(d) = r.degree_used {
                if d > 0 {
                    assert_eq!(ds.last(), Some(&d));
                }
            }
        }
    }
}

#[test]
fn exact_only_never_reports_numeric_values() {
    for (g, h, vs) in CORPUS {
        let r = run(g, h, vs, &MlimConfig { engine: mlim::ratlimit::EngineMode::ExactOnly, ..Default::default() });
        for b in [&r.lower, &r.upper, &r.limit].into_iter().flatten() {
            assert!(b.certainty.is_exact(), "{} / {}", g, h);
        }
    }
}
