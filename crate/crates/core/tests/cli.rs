mod common;

use common::*;
use mlim::cli::{main_with_args, EXIT_ERROR, EXIT_INCONCLUSIVE, EXIT_NON_ISOLATED, EXIT_OK};
use mlim::mlim::{mlim_run, MlimConfig};
use mlim::polyalg::{var_list, ExtReal, Finite, Real};
use mlim::series::parse_expr;
use serde_json::Value;

fn cli(args: &[&str]) -> mlim::cli::CliOutput {
    main_with_args(std::iter::once("mlim").chain(args.iter().copied()))
}

#[test]
fn reference_invocations() {
    let r = cli(&["--num", "sin(x^2+y^2+z^2)", "--den", "3-cos(x)-cos(y)-cos(z)", "--vars", "x,y,z", "--mode", "lim"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout, "limit = 2 (exact, d=2)\n");

    let r = cli(&["--num", "sin(x*y)", "--den", "cos(x)+cos(y)-2", "--vars", "x,y", "--mode", "lim", "--json"]);
    assert_eq!(r.code, EXIT_OK);
    let v = validate_result(&r.stdout).unwrap();
    assert_eq!(v["status"], "does_not_exist");

    let r = cli(&["--num", "1", "--den", "y^4+(y-x^2)^2-x^6-y^6", "--vars", "x,y"]);
    assert_eq!(r.code, EXIT_NON_ISOLATED);
    assert!(r.stdout.contains("y = |x|^2 - |x|^3 + 1/2*|x|^5 - 2*|x|^6 + 25/8*|x|^7"), "{}", r.stdout);

    let r = cli(&["--num", "1+x", "--den", "2+y", "--vars", "x,y", "--mode", "lim"]);
    assert_eq!((r.code, r.stdout.as_str()), (EXIT_OK, "limit = 1/2 (exact, d=0)\n"));
}

#[test]
fn worked_example_json() {
    let (code, out) = run_json(JSON_SUITE[2]);
    assert_eq!(code, EXIT_OK);
    let v = validate_result(&out).unwrap();
    assert_eq!(v["degree_used"], 3);
    assert_eq!(v["upper"], "0");
    assert_eq!(v["lower"]["value"], "-4");
    assert_eq!(v["certainty"], "numeric");
    assert_eq!(v["seed"], 0);
}

#[test]
fn inconclusive_exit_code() {
    let (code, out) = run_json(JSON_SUITE[6]);
    assert_eq!(code, EXIT_INCONCLUSIVE);
    let v = validate_result(&out).unwrap();
    assert_eq!(v["status"], "inconclusive");
    assert_eq!(v["diagnostics"]["step2"].as_array().unwrap().len(), 2);
}

#[test]
fn errors_exit_with_code_four() {
    let r = cli(&["--num", "sin(x+", "--den", "x", "--vars", "x"]);
    assert_eq!(r.code, EXIT_ERROR);
    assert!(r.stderr.contains("position 6"), "{}", r.stderr);
    let bad: [&[&str]; 7] = [
        &["--num", "x", "--den", "w", "--vars", "x"],
        &["--num", "x", "--den", "x^(1/2)", "--vars", "x"],
        &["--num", "x", "--den", "log(x)", "--vars", "x"],
        &["--num", "x", "--den", "x", "--vars", "x,x"],
        &["--num", "x", "--den", "x", "--vars", "x,y", "--point", "1"],
        &["--num", "x", "--den", "x", "--vars", "x", "--max-degree", "1"],
        &["--num", "x", "--den", "x", "--vars", "x", "--mode", "sideways"],
    ];
    for args in bad {
        let r = cli(args);
        assert_eq!(r.code, EXIT_ERROR, "{:?}: {}", args, r.stdout);
        assert!(!r.stderr.is_empty());
    }
}

#[test]
fn point_flag() {
    let r = cli(&["--num", "sin((x-1)*(y+2))", "--den", "cos(x-1)+cos(y+2)-2", "--vars", "x,y", "--point", "1,-2"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.stdout, "liminf = -1 (exact, d=2)\nlimsup = 1 (exact, d=2)\n");
}

#[test]
fn suite_matches_schema() {
    for args in JSON_SUITE {
        let (_, out) = run_json(args);
        validate_result(&out).unwrap_or_else(|e| panic!("{:?}: {}", args, e));
    }
    let schema = load_schema();
    let bogus: Value = serde_json::from_str(r#"{"status":"maybe"}"#).unwrap();
    assert!(validate(&bogus, &schema, &schema, "$").is_err());
}

#[test]
fn byte_identical_json() {
    assert!(determinism_mismatches().is_empty());
}

fn value_matches(j: &Value, b: &Option<mlim::ratlimit::Bound>) -> bool {
    let Some(b) = b else { return j.is_null() };
    let exact = |j: &Value, v: &ExtReal| match (j, v) {
        (Value::String(s), _) => v.exactly_equals(&ext(s)),
        (Value::Object(o), ExtReal::Finite(Finite::Exact(Real::Alg(a)))) => {
            let alg = &o["alg"];
            let (lo, hi) = a.interval();
            alg["minpoly"] == a.poly().fmt_var("t") && alg["interval"][0] == mlim::polyalg::rat::fmt_rat(lo) && alg["interval"][1] == mlim::polyalg::rat::fmt_rat(hi)
        }
        (Value::Number(n), ExtReal::Finite(Finite::Approx { value, .. })) => n.as_f64() == Some(*value),
        _ => false,
    };
    if b.certainty.is_exact() {
        exact(j, &b.value)
    } else {
        exact(&j["value"], &b.value) && j["error"].as_f64() == Some(b.certainty.error())
    }
}

#[test]
fn json_round_trips() {
    for args in JSON_SUITE {
        let (_, out) = run_json(args);
        let v = validate_result(&out).unwrap();
        let get = |flag: &str| args.iter().position(|a| *a == flag).map(|i| args[i + 1]);
        let n: Vec<String> = get("--vars").unwrap().split(',').map(String::from).collect();
        let mut cfg = MlimConfig::default();
        cfg.mode = match get("--mode").unwrap_or("both") {
            "lim" => mlim::mlim::LimitMode::Lim,
            "liminf" => mlim::mlim::LimitMode::Liminf,
            "limsup" => mlim::mlim::LimitMode::Limsup,
            _ => mlim::mlim::LimitMode::Both,
        };
        cfg.numeric.seed = get("--seed").map_or(0, |s| s.parse().unwrap());
        cfg.d_max = get("--max-degree").map_or(12, |s| s.parse().unwrap());
        let g = parse_expr(get("--num").unwrap(), &n).unwrap();
        let h = parse_expr(get("--den").unwrap(), &n).unwrap();
        let zero = vec![rat("0"); n.len()];
        let r = mlim_run(&g, &h, &var_list(&n), &zero, &cfg).unwrap();
        assert_eq!(v["status"], r.status.name());
        assert_eq!(v["mode"], r.mode.name());
        assert!(value_matches(&v["lower"], &r.lower), "{:?}", args);
        assert!(value_matches(&v["upper"], &r.upper), "{:?}", args);
        assert!(value_matches(&v["limit"], &r.limit), "{:?}", args);
        assert_eq!(v["degree_used"].as_u64(), r.degree_used.map(u64::from));
        assert_eq!(v["seed"].as_u64(), Some(r.seed));
        let step2: Vec<u64> = v["diagnostics"]["step2"].as_array().unwrap().iter().map(|s| s["d"].as_u64().unwrap()).collect();
        assert_eq!(step2, r.diagnostics.step2.iter().map(|s| u64::from(s.d)).collect::<Vec<_>>());
        let tiers: Vec<&str> = v["diagnostics"]["tiers"].as_array().unwrap().iter().map(|t| t.as_str().unwrap()).collect();
        assert_eq!(tiers, r.diagnostics.tiers.iter().map(|t| t.name()).collect::<Vec<_>>());
        let w: Vec<(String, String)> = v["diagnostics"]["witnesses"].as_array().unwrap().iter().map(|w| (w["kind"].as_str().unwrap().into(), w["detail"].as_str().unwrap().into())).collect();
        assert_eq!(w, r.diagnostics.witnesses.iter().map(|w| (w.kind.clone(), w.detail.clone())).collect::<Vec<_>>());
    }
}

#[test]
fn help_exits_cleanly() {
    let r = cli(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    for flag in ["--num", "--den", "--vars", "--point", "--mode", "--engine", "--max-degree", "--seed", "--json", "--verbose"] {
        assert!(r.stdout.contains(flag), "{}", flag);
    }
}
