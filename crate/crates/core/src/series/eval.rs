//! Double-precision evaluation with domain checks.

use super::expr::{Expr, FunKind};
use crate::polyalg::rat::rat_to_f64;
use crate::polyalg::VarList;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DomainKind {
    SqrtOfNegative,
    LogOfNonPositive,
    AsinOutOfRange,
    DivisionByZero,
}

/// Evaluation left the domain at the node rendered in `node`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainError {
    pub node: String,
    pub kind: DomainKind,
}

impl fmt::Display for DomainError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            DomainKind::SqrtOfNegative => "square root of a negative number",
            DomainKind::LogOfNonPositive => "logarithm of a non-positive number",
            DomainKind::AsinOutOfRange => "asin argument outside [-1, 1]",
            DomainKind::DivisionByZero => "division by zero",
        };
        write!(f, "domain error in {}: {}", self.node, what)
    }
}

impl std::error::Error for DomainError {}

/// Applies an elementary function; `Err` carries the kind of domain violation.
pub fn apply_fun(kind: FunKind, t: f64) -> Result<f64, DomainKind> {
    Ok(match kind {
        FunKind::Sin => t.sin(),
        FunKind::Cos => t.cos(),
        FunKind::Tan => t.tan(),
        FunKind::Exp => t.exp(),
        FunKind::Log => {
            if t <= 0.0 {
                return Err(DomainKind::LogOfNonPositive);
            }
            t.ln()
        }
        FunKind::Sqrt => {
            if t < 0.0 {
                return Err(DomainKind::SqrtOfNegative);
            }
            t.sqrt()
        }
        FunKind::Asin => {
            if !(-1.0..=1.0).contains(&t) {
                return Err(DomainKind::AsinOutOfRange);
            }
            t.asin()
        }
        FunKind::Atan => t.atan(),
        FunKind::Sinh => t.sinh(),
        FunKind::Cosh => t.cosh(),
        FunKind::Tanh => t.tanh(),
    })
}

/// Evaluates `e` at `u`; `vars` only serves error messages.
pub fn eval_numeric(e: &Expr, vars: &VarList, u: &[f64]) -> Result<f64, DomainError> {
    let fail = |node: &Expr, kind| DomainError { node: node.display(vars).to_string(), kind };
    Ok(match e {
        Expr::Const(c) => rat_to_f64(c),
        Expr::Var(i) => u[*i],
        Expr::Add(v) => {
            let mut s = 0.0;
            for t in v {
                s += eval_numeric(t, vars, u)?;
            }
            s
        }
        Expr::Mul(v) => {
            let mut s = 1.0;
            for t in v {
                s *= eval_numeric(t, vars, u)?;
            }
            s
        }
        Expr::Neg(a) => -eval_numeric(a, vars, u)?,
        Expr::Div(a, b) => {
            let den = eval_numeric(b, vars, u)?;
            if den == 0.0 {
                return Err(fail(e, DomainKind::DivisionByZero));
            }
            eval_numeric(a, vars, u)? / den
        }
        Expr::IntPow(a, k) => eval_numeric(a, vars, u)?.powi(*k as i32),
        Expr::Fun(kind, a) => apply_fun(*kind, eval_numeric(a, vars, u)?).map_err(|k| fail(e, k))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::parse::parse_expr;

    #[test]
    fn basic_values() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let vl = crate::polyalg::var_list(&names);
        let e = parse_expr("sin(x*y)", &names).unwrap();
        assert!((eval_numeric(&e, &vl, &[0.1, 0.2, 0.0]).unwrap() - 0.02f64.sin()).abs() < 1e-15);
        let e = parse_expr("3-cos(x)-cos(y)-cos(z)", &names).unwrap();
        assert_eq!(eval_numeric(&e, &vl, &[0.0; 3]).unwrap(), 0.0);
        let e = parse_expr("sqrt(x)", &names).unwrap();
        let err = eval_numeric(&e, &vl, &[-1.0, 0.0, 0.0]).unwrap_err();
        assert_eq!(err.kind, DomainKind::SqrtOfNegative);
        assert_eq!(err.node, "sqrt(x)");
    }
}
