use crate::polyalg::rat::{factorial, rat, Rat};
use crate::polyalg::VarList;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Elementary functions allowed in expressions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FunKind {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Sqrt,
    Asin,
    Atan,
    Sinh,
    Cosh,
    Tanh,
}

impl FunKind {
    pub const ALL: [FunKind; 11] = [
        FunKind::Sin,
        FunKind::Cos,
        FunKind::Tan,
        FunKind::Exp,
        FunKind::Log,
        FunKind::Sqrt,
        FunKind::Asin,
        FunKind::Atan,
        FunKind::Sinh,
        FunKind::Cosh,
        FunKind::Tanh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunKind::Sin => "sin",
            FunKind::Cos => "cos",
            FunKind::Tan => "tan",
            FunKind::Exp => "exp",
            FunKind::Log => "log",
            FunKind::Sqrt => "sqrt",
            FunKind::Asin => "asin",
            FunKind::Atan => "atan",
            FunKind::Sinh => "sinh",
            FunKind::Cosh => "cosh",
            FunKind::Tanh => "tanh",
        }
    }

    pub fn from_name(s: &str) -> Option<FunKind> {
        FunKind::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Expansion point: 1 for `log` and `sqrt`, 0 otherwise.
    pub fn center(self) -> Rat {
        match self {
            FunKind::Log | FunKind::Sqrt => Rat::one(),
            _ => Rat::zero(),
        }
    }

    /// Taylor coefficients `c_0..=c_d` at the center.
    pub fn coeffs(self, d: u32) -> Vec<Rat> {
        match self {
            FunKind::Tan => return tan_like(d, Rat::one()),
            FunKind::Tanh => return tan_like(d, -Rat::one()),
            _ => {}
        }
        let inv_fact = |k: u32| Rat::new(1.into(), factorial(k));
        (0..=d)
            .map(|k| match self {
                FunKind::Exp => inv_fact(k),
                FunKind::Sin | FunKind::Cos => {
                    let odd = self == FunKind::Sin;
                    if (k % 2 == 1) != odd {
                        Rat::zero()
                    } else {
                        let j = if odd { (k - 1) / 2 } else { k / 2 };
                        if j % 2 == 0 {
                            inv_fact(k)
                        } else {
                            -inv_fact(k)
                        }
                    }
                }
                FunKind::Sinh => if k % 2 == 1 { inv_fact(k) } else { Rat::zero() },
                FunKind::Cosh => if k % 2 == 0 { inv_fact(k) } else { Rat::zero() },
                FunKind::Atan => {
                    if k % 2 == 0 {
                        Rat::zero()
                    } else {
                        let j = (k - 1) / 2;
                        let v = Rat::new(1.into(), k.into());
                        if j % 2 == 0 { v } else { -v }
                    }
                }
                FunKind::Asin => {
                    if k % 2 == 0 {
                        Rat::zero()
                    } else {
                        let j = (k - 1) / 2;
                        let num = factorial(2 * j);
                        let jf = factorial(j);
                        let den = num_bigint::BigInt::from(4u32).pow(j) * &jf * &jf * (2 * j + 1);
                        BigRational::new(num, den)
                    }
                }
                FunKind::Log => {
                    if k == 0 {
                        Rat::zero()
                    } else {
                        let v = Rat::new(1.into(), k.into());
                        if k % 2 == 1 { v } else { -v }
                    }
                }
                FunKind::Sqrt => {
                    // generalized binomial coefficient C(1/2, k)
                    let half = Rat::new(1.into(), 2.into());
                    let mut v = Rat::one();
                    for i in 0..k {
                        v = v * (&half - rat(i as i64)) / rat(i as i64 + 1);
                    }
                    v
                }
                FunKind::Tan | FunKind::Tanh => unreachable!(),
            })
            .collect()
    }
}

// Coefficients of the odd solution of T' = 1 + s T^2, T(0) = 0
// (s = 1 gives tan, s = -1 gives tanh).
fn tan_like(d: u32, s: Rat) -> Vec<Rat> {
    let n = d as usize;
    let mut t = vec![Rat::zero(); n + 1];
    for k in 0..n {
        let mut sq = Rat::zero();
        for i in 0..=k {
            sq += &t[i] * &t[k - i];
        }
        let rhs = if k == 0 { Rat::one() } else { Rat::zero() } + &s * sq;
        t[k + 1] = rhs / rat(k as i64 + 1);
    }
    t
}

/// Analytic expression tree over an external variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Expr {
    Const(Rat),
    Var(usize),
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Neg(Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    IntPow(Box<Expr>, u32),
    Fun(FunKind, Box<Expr>),
}

impl Expr {
    pub fn constant(c: Rat) -> Expr {
        Expr::Const(c)
    }

    pub fn int(v: i64) -> Expr {
        Expr::Const(rat(v))
    }

    pub fn fun(kind: FunKind, arg: Expr) -> Expr {
        Expr::Fun(kind, Box::new(arg))
    }

    pub fn pow(self, k: u32) -> Expr {
        Expr::IntPow(Box::new(self), k)
    }

    pub fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }

    pub fn div(self, den: Expr) -> Expr {
        Expr::Div(Box::new(self), Box::new(den))
    }

    /// Replaces every `Var(i)` by `Var(i) + c_i`, moving the point `c` to the origin.
    pub fn shift_point(&self, c: &[Rat]) -> Expr {
        match self {
            Expr::Var(i) => {
                if c[*i].is_zero() {
                    Expr::Var(*i)
                } else {
                    Expr::Add(vec![Expr::Var(*i), Expr::Const(c[*i].clone())])
                }
            }
            Expr::Const(_) => self.clone(),
            Expr::Add(v) => Expr::Add(v.iter().map(|e| e.shift_point(c)).collect()),
            Expr::Mul(v) => Expr::Mul(v.iter().map(|e| e.shift_point(c)).collect()),
            Expr::Neg(e) => Expr::Neg(Box::new(e.shift_point(c))),
            Expr::Div(a, b) => Expr::Div(Box::new(a.shift_point(c)), Box::new(b.shift_point(c))),
            Expr::IntPow(e, k) => Expr::IntPow(Box::new(e.shift_point(c)), *k),
            Expr::Fun(f, e) => Expr::Fun(*f, Box::new(e.shift_point(c))),
        }
    }

    /// Highest variable index used, plus one.
    pub fn var_bound(&self) -> usize {
        match self {
            Expr::Var(i) => i + 1,
            Expr::Const(_) => 0,
            Expr::Add(v) | Expr::Mul(v) => v.iter().map(Expr::var_bound).max().unwrap_or(0),
            Expr::Neg(e) | Expr::IntPow(e, _) | Expr::Fun(_, e) => e.var_bound(),
            Expr::Div(a, b) => a.var_bound().max(b.var_bound()),
        }
    }

    /// Total degree when the expression is syntactically a polynomial
    /// (no function nodes, divisions only by constant subexpressions).
    pub fn polynomial_degree(&self) -> Option<u32> {
        match self {
            Expr::Const(_) => Some(0),
            Expr::Var(_) => Some(1),
            Expr::Add(v) => v.iter().map(Expr::polynomial_degree).try_fold(0, |m, d| d.map(|d| m.max(d))),
            Expr::Mul(v) => v.iter().map(Expr::polynomial_degree).try_fold(0, |s, d| d.map(|d| s + d)),
            Expr::Neg(e) => e.polynomial_degree(),
            Expr::IntPow(e, k) => e.polynomial_degree().map(|d| d * k),
            Expr::Div(a, b) => match b.polynomial_degree() {
                Some(0) => a.polynomial_degree(),
                _ => None,
            },
            Expr::Fun(..) => None,
        }
    }

    pub fn display<'a>(&'a self, vars: &'a VarList) -> ExprDisplay<'a> {
        ExprDisplay { e: self, vars }
    }
}

/// Renders an expression in the input grammar.
pub struct ExprDisplay<'a> {
    e: &'a Expr,
    vars: &'a VarList,
}

impl ExprDisplay<'_> {
    fn prec(e: &Expr) -> u8 {
        match e {
            Expr::Add(_) => 1,
            Expr::Mul(_) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::IntPow(..) => 4,
            Expr::Const(c) if !c.is_integer() || c < &Rat::zero() => 2,
            _ => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, e: &Expr, min_prec: u8) -> fmt::Result {
        let paren = Self::prec(e) < min_prec;
        if paren {
            write!(f, "(")?;
        }
        match e {
            Expr::Const(c) => write!(f, "{}", crate::polyalg::rat::fmt_rat(c))?,
            Expr::Var(i) => write!(f, "{}", self.vars.get(*i).map(String::as_str).unwrap_or("?"))?,
            Expr::Add(v) => {
                for (k, t) in v.iter().enumerate() {
                    if k == 0 {
                        self.write(f, t, 2)?;
                        continue;
                    }
                    match t {
                        Expr::Neg(a) => {
                            write!(f, " - ")?;
                            self.write(f, a, 2)?;
                        }
                        Expr::Const(c) if c < &Rat::zero() => write!(f, " - {}", crate::polyalg::rat::fmt_rat(&-c))?,
                        _ => {
                            write!(f, " + ")?;
                            self.write(f, t, 2)?;
                        }
                    }
                }
                if v.is_empty() {
                    write!(f, "0")?;
                }
            }
            Expr::Mul(v) => {
                for (k, t) in v.iter().enumerate() {
                    if k > 0 {
                        write!(f, "*")?;
                    }
                    self.write(f, t, 3)?;
                }
                if v.is_empty() {
                    write!(f, "1")?;
                }
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                self.write(f, a, 4)?;
            }
            Expr::Div(a, b) => {
                self.write(f, a, 3)?;
                write!(f, "/")?;
                self.write(f, b, 4)?;
            }
            Expr::IntPow(a, k) => {
                self.write(f, a, 5)?;
                write!(f, "^{}", k)?;
            }
            Expr::Fun(kind, a) => {
                write!(f, "{}(", kind.name())?;
                self.write(f, a, 0)?;
                write!(f, ")")?;
            }
        }
        if paren {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, self.e, 0)
    }
}
