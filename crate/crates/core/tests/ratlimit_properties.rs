mod common;

use common::*;
use mlim::polyalg::{var_list, MPoly, Monomial, Rat};
use mlim::ratlimit::{critical_curve, liminf_limsup, monomial_certificate, zero_limit_test, EngineConfig, ZeroOutcome};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn invariants_on_seeded_instances() {
    let f = invariant_failures(200);
    assert!(f.is_empty(), "{:#?}", f);
}

#[test]
fn exact_and_numeric_engines_agree() {
    let r = cross_engine();
    for l in &r.lines {
        eprintln!("{}", l);
    }
    assert!(r.pass >= 48, "{} of 50 agree", r.pass);
}

#[test]
fn critical_curve_has_zeros_on_small_circles() {
    for (p, q) in cross_engine_corpus() {
        let Ok(cc) = critical_curve(&p, &q) else { continue };
        for r in [1e-2, 1e-3] {
            let vals: Vec<f64> = (0..=4000)
                .map(|k| {
                    let t = std::f64::consts::TAU * k as f64 / 4000.0;
                    cc.w.eval_f64(&[r * t.cos(), r * t.sin()])
                })
                .collect();
            let changes = vals.windows(2).any(|w| w[0] == 0.0 || w[0].signum() != w[1].signum());
            assert!(changes, "W = {} has no zero on the circle of radius {} ({} / {})", cc.w, r, p, q);
        }
    }
}

#[test]
fn monomial_certificates_reverify() {
    let xyz = ["x", "y", "z"];
    let qs = [
        poly("-(x^4+12*x^2*y^2+24*x^2+12*y^4+48*y^2+48*z^4)/96", &xyz),
        poly("x^2+2*y^4+z^6+x^2*z^2", &xyz),
        poly("3*x^4+y^2+z^2+x^2*y^2*z^2", &xyz),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in qs {
        let (sign, a) = monomial_certificate(&q).unwrap();
        let c = q
            .terms()
            .filter_map(|(m, k)| m.pure_power().map(|_| k.clone()))
            .map(|k| num_traits::Signed::abs(&k))
            .min()
            .unwrap();
        let c = f64_of(&c);
        for _ in 0..1000 {
            let r = rng.gen_range(0.0..0.1);
            let u: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0f64..1.0)).collect();
            let norm = u.iter().map(|v| v * v).sum::<f64>().sqrt();
            let u: Vec<f64> = u.iter().map(|v| v * r / norm).collect();
            let lhs = sign as f64 * q.eval_f64(&u);
            let rhs = c * u.iter().zip(&a).map(|(v, &k)| v.powi(2 * k as i32)).sum::<f64>();
            assert!(lhs >= rhs * (1.0 - 1e-12), "{} at {:?}", q, u);
        }
    }
}

#[test]
fn is_zero_exact_certificates_imply_vanishing_quotient() {
    // along random rays s_d/Q must shrink when the test certified IsZero
    let cfg = EngineConfig::default();
    for (_, q) in cross_engine_corpus().iter().take(20) {
        for d in 2..=4 {
            let r = zero_limit_test(q, d, &cfg);
            if r.outcome == ZeroOutcome::IsZero {
                let s = mlim::ratlimit::build_power_sum(q.vars(), d);
                for t in [0.3f64, 1.1, 2.0, 4.0] {
                    let f = |rho: f64| {
                        let u = [rho * t.cos(), rho * t.sin()];
                        (s.eval_f64(&u) / q.eval_f64(&u)).abs()
                    };
                    assert!(f(1e-4) < f(1e-2) + 1e-12, "{} d={}", q, d);
                }
            }
        }
    }
}

fn pair_strategy() -> impl Strategy<Value = (MPoly, MPoly)> {
    let vars = var_list(&["x", "y"]);
    let num_term = (-4i64..=4, 0u32..=4, 0u32..=4);
    (prop::collection::vec(num_term, 1..4), 1u32..=2, 1u32..=2, 1i64..=3, 1i64..=3, any::<bool>()).prop_map(move |(terms, i, j, a, b, neg)| {
        let mut p = MPoly::zero(vars.clone());
        for (c, e1, e2) in terms {
            p.add_term(Monomial::new(vec![e1, e2]), Rat::from_integer(c.into()));
        }
        let mut q = MPoly::zero(vars.clone());
        let s = if neg { -1 } else { 1 };
        q.add_term(Monomial::new(vec![2 * i, 0]), Rat::from_integer((s * a).into()));
        q.add_term(Monomial::new(vec![0, 2 * j]), Rat::from_integer((s * b).into()));
        (p, q)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn duality_scaling_permutation((p, q) in pair_strategy()) {
        let v = invariant_violations(&p, &q);
        prop_assert!(v.is_empty(), "{:?}", v);
    }

    #[test]
    fn lower_is_at_most_upper((p, q) in pair_strategy()) {
        let v = liminf_limsup(&p, &q, &EngineConfig::default()).unwrap();
        let (lo, hi) = (v.lower.unwrap().value, v.upper.unwrap().value);
        prop_assert_ne!(lo.cmp_ext(&hi), Some(std::cmp::Ordering::Greater));
    }
}
