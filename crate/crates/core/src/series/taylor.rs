use super::expr::Expr;
use super::SeriesError;
use crate::polyalg::{MPoly, Rat, VarList};
use num_traits::Zero;

/// `sum_k coeffs[k] * t^k` truncated at total degree `d`; `t` must have zero
/// constant term.
pub fn compose_series(coeffs: &[Rat], t: &MPoly, d: u32) -> MPoly {
    let vars = t.vars().clone();
    let Some(ord) = t.order() else {
        return MPoly::constant(vars, coeffs.first().cloned().unwrap_or_else(Rat::zero));
    };
    debug_assert!(ord >= 1);
    let kmax = ((d / ord) as usize).min(coeffs.len().saturating_sub(1));
    let mut acc = MPoly::constant(vars.clone(), coeffs[kmax].clone());
    for k in (0..kmax).rev() {
        acc = acc.checked_truncmul(t, d).expect("same variables");
        acc.add_term(crate::polyalg::Monomial::one(vars.len()), coeffs[k].clone());
    }
    acc
}

/// Multiplicative inverse of a series with nonzero constant term, to degree `d`.
pub fn inverse_series(b: &MPoly, d: u32) -> Option<MPoly> {
    let b0 = b.constant_term();
    if b0.is_zero() {
        return None;
    }
    let t = b - &MPoly::constant(b.vars().clone(), b0.clone());
    let r = b0.recip();
    let mut coeffs = Vec::with_capacity(d as usize + 1);
    let mut c = r.clone();
    for _ in 0..=d {
        coeffs.push(c.clone());
        c = -(c * &r);
    }
    Some(compose_series(&coeffs, &t, d))
}

/// Total-degree Taylor polynomial `T_d e` at the origin, exact over the rationals.
pub fn taylor(e: &Expr, vars: &VarList, d: u32) -> Result<MPoly, SeriesError> {
    let n = vars.len();
    Ok(match e {
        Expr::Const(c) => MPoly::constant(vars.clone(), c.clone()),
        Expr::Var(i) => {
            assert!(*i < n, "variable index out of range");
            if d == 0 {
                MPoly::zero(vars.clone())
            } else {
                MPoly::var(vars.clone(), *i)
            }
        }
        Expr::Add(v) => {
            let mut acc = MPoly::zero(vars.clone());
            for t in v {
                acc = &acc + &taylor(t, vars, d)?;
            }
            acc
        }
        Expr::Mul(v) => {
            let mut acc = MPoly::one(vars.clone());
            for t in v {
                if acc.is_zero() {
                    break;
                }
                acc = acc.checked_truncmul(&taylor(t, vars, d)?, d).expect("same variables");
            }
            acc
        }
        Expr::Neg(a) => -taylor(a, vars, d)?,
        Expr::Div(a, b) => {
            let den = taylor(b, vars, d)?;
            let inv = inverse_series(&den, d).ok_or_else(|| SeriesError::DivisionBySeriesWithZeroConstant {
                node: e.display(vars).to_string(),
            })?;
            taylor(a, vars, d)?.checked_truncmul(&inv, d).expect("same variables")
        }
        Expr::IntPow(a, k) => {
            if *k == 0 {
                MPoly::one(vars.clone())
            } else {
                taylor(a, vars, d)?.pow_trunc(*k, d)
            }
        }
        Expr::Fun(kind, a) => {
            let arg = taylor(a, vars, d)?;
            let center = kind.center();
            let found = arg.constant_term();
            if found != center {
                return Err(SeriesError::CenterViolation { node: e.display(vars).to_string(), found, expected: center });
            }
            let t = &arg - &MPoly::constant(vars.clone(), center);
            compose_series(&kind.coeffs(d), &t, d)
        }
    })
}

/// Exact value at the origin (`T_0`).
pub fn value_at_origin(e: &Expr, vars: &VarList) -> Result<Rat, SeriesError> {
    Ok(taylor(e, vars, 0)?.constant_term())
}

/// The expression as an exact polynomial when it is syntactically one.
pub fn as_polynomial(e: &Expr, vars: &VarList) -> Option<MPoly> {
    let deg = e.polynomial_degree()?;
    taylor(e, vars, deg).ok()
}

/// Parses `text` over `names` and returns it as a polynomial, or `None`
/// when it does not parse or is not syntactically polynomial.
pub fn parse_polynomial<S: AsRef<str>>(text: &str, names: &[S]) -> Option<MPoly> {
    let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
    let e = crate::series::parse_expr(text, &names).ok()?;
    as_polynomial(&e, &crate::polyalg::var_list(&names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat::{rat, ratio};
    use crate::polyalg::var_list;
    use crate::series::parse::parse_expr;

    fn setup(names: &[&str]) -> (Vec<String>, VarList) {
        let v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let vl = var_list(&v);
        (v, vl)
    }

    fn poly(vl: &VarList, terms: &[(&[u32], Rat)]) -> MPoly {
        MPoly::from_terms(vl.clone(), terms.iter().map(|(e, c)| (e.to_vec(), c.clone())))
    }

    #[test]
    fn cosine_sum() {
        let (v, vl) = setup(&["x", "y", "z"]);
        let e = parse_expr("3-cos(x)-cos(y)-cos(z)", &v).unwrap();
        let h = ratio(1, 2);
        assert_eq!(taylor(&e, &vl, 3).unwrap(), poly(&vl, &[(&[2, 0, 0], h.clone()), (&[0, 2, 0], h.clone()), (&[0, 0, 2], h)]));
    }

    #[test]
    fn worked_example_truncations() {
        let (v, vl) = setup(&["x", "y", "z"]);
        let h = parse_expr("sqrt(cos(x)-sin(y^2)-z^4)-1", &v).unwrap();
        let g = parse_expr("exp(sin(x^2+y^4+z^6))-1", &v).unwrap();
        let t3h = poly(&vl, &[(&[2, 0, 0], ratio(-1, 4)), (&[0, 2, 0], ratio(-1, 2))]);
        assert_eq!(taylor(&h, &vl, 3).unwrap(), t3h);
        let c = |k: i64| ratio(-k, 96);
        let t5h = poly(
            &vl,
            &[(&[4, 0, 0], c(1)), (&[2, 2, 0], c(12)), (&[2, 0, 0], c(24)), (&[0, 4, 0], c(12)), (&[0, 2, 0], c(48)), (&[0, 0, 4], c(48))],
        );
        assert_eq!(taylor(&h, &vl, 5).unwrap(), t5h);
        let t5g = poly(&vl, &[(&[4, 0, 0], ratio(1, 2)), (&[2, 0, 0], rat(1)), (&[0, 4, 0], rat(1))]);
        assert_eq!(taylor(&g, &vl, 5).unwrap(), t5g);
    }

    #[test]
    fn polynomial_is_fixed_point() {
        let (v, vl) = setup(&["x", "y"]);
        let e = parse_expr("x^4+(x-y^2)^2", &v).unwrap();
        let p = as_polynomial(&e, &vl).unwrap();
        assert_eq!(p.total_degree(), Some(4));
        assert_eq!(taylor(&e, &vl, 9).unwrap(), p);
    }

    #[test]
    fn division_and_tan() {
        let (v, vl) = setup(&["x"]);
        let q = taylor(&parse_expr("sin(x)/cos(x)", &v).unwrap(), &vl, 7).unwrap();
        assert_eq!(q, taylor(&parse_expr("tan(x)", &v).unwrap(), &vl, 7).unwrap());
        let inv = taylor(&parse_expr("1/(1-x)", &v).unwrap(), &vl, 4).unwrap();
        assert_eq!(inv, poly(&vl, &[(&[0], rat(1)), (&[1], rat(1)), (&[2], rat(1)), (&[3], rat(1)), (&[4], rat(1))]));
    }

    #[test]
    fn zero_power_is_one() {
        let (v, vl) = setup(&["x"]);
        assert_eq!(taylor(&parse_expr("x^0", &v).unwrap(), &vl, 3).unwrap(), MPoly::one(vl.clone()));
        assert_eq!(taylor(&parse_expr("(x-x)^0", &v).unwrap(), &vl, 3).unwrap(), MPoly::one(vl));
    }

    #[test]
    fn center_violations() {
        let (v, vl) = setup(&["x"]);
        let err = taylor(&parse_expr("log(x)", &v).unwrap(), &vl, 3).unwrap_err();
        assert!(matches!(err, SeriesError::CenterViolation { ref found, .. } if found.is_zero()));
        assert!(matches!(taylor(&parse_expr("sin(1+x)", &v).unwrap(), &vl, 3), Err(SeriesError::CenterViolation { .. })));
        assert!(matches!(taylor(&parse_expr("1/x", &v).unwrap(), &vl, 3), Err(SeriesError::DivisionBySeriesWithZeroConstant { .. })));
        assert!(taylor(&parse_expr("log(1+x)+sqrt(1-x)", &v).unwrap(), &vl, 3).is_ok());
    }

    #[test]
    fn zero_truncation_is_legal() {
        let (v, vl) = setup(&["x", "y"]);
        let e = parse_expr("x^3*y^3", &v).unwrap();
        assert!(taylor(&e, &vl, 5).unwrap().is_zero());
    }
}
