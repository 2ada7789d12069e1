//! Gcd and squarefree part of polynomials in at most two variables.
//!
//! The gcd runs a primitive remainder sequence in `Q[x][y]` (`x` = variable 0,
//! `y` = variable 1) with univariate content gcds in `x`.

use super::mpoly::{Monomial, MPoly};
use super::rat::Rat;
use super::upoly::UPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Scales `p` so its graded-lex leading coefficient is 1.
pub fn normalize(p: &MPoly) -> MPoly {
    match p.leading_term() {
        Some((_, c)) => p.scale(&c.recip()),
        None => p.clone(),
    }
}

/// Gcd over `Q[x]` of the coefficients of `p` with respect to `y`.
fn content_y(p: &MPoly) -> UPoly {
    let mut g = UPoly::zero();
    for c in p.coeffs_in(1) {
        if c.is_zero() {
            continue;
        }
        let u = c.to_upoly(0).expect("coefficient free of y");
        g = if g.is_zero() { u } else { g.gcd(&u) };
        if g.deg() == 0 {
            return UPoly::one();
        }
    }
    if g.is_zero() {
        g
    } else {
        g.gcd(&g)
    }
}

/// Divides out the rational content, leaving coprime integer coefficients.
fn scalar_primitive(p: &MPoly) -> MPoly {
    let (mut num, mut den) = (BigInt::zero(), BigInt::one());
    for (_, c) in p.terms() {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_zero() {
        return p.clone();
    }
    p.scale(&Rat::new(den, num))
}

fn primitive_y(p: &MPoly) -> MPoly {
    let c = content_y(p);
    if c.is_zero() {
        return p.clone();
    }
    scalar_primitive(&p.div_exact(&MPoly::from_upoly(p.vars().clone(), 0, &c)).expect("content divides"))
}

/// Pseudo-remainder of `a` by `b` with respect to `y`.
fn prem_y(a: &MPoly, b: &MPoly) -> MPoly {
    let db = b.degree_in(1);
    let lb = b.coeffs_in(1).pop().expect("nonzero divisor");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(1) >= db {
        let dr = r.degree_in(1);
        let lr = r.coeffs_in(1).pop().unwrap();
        let shift = Monomial::var(2, 1, dr - db);
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
    }
    r
}

/// Normalized gcd of two polynomials in at most two variables.
pub fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    assert!(f.same_vars(g) && f.nvars() <= 2, "bivariate gcd needs a common list of at most two variables");
    if f.is_zero() {
        return normalize(g);
    }
    if g.is_zero() {
        return normalize(f);
    }
    let vars = f.vars().clone();
    if f.nvars() < 2 {
        let i = 0.min(f.nvars().saturating_sub(1));
        if f.nvars() == 0 {
            return MPoly::one(vars);
        }
        let u = f.to_upoly(i).unwrap().gcd(&g.to_upoly(i).unwrap());
        return MPoly::from_upoly(vars, i, &u);
    }
    let c = content_y(f).gcd(&content_y(g));
    let (mut a, mut b) = (primitive_y(f), primitive_y(g));
    if a.degree_in(1) < b.degree_in(1) {
        std::mem::swap(&mut a, &mut b);
    }
    let prim = loop {
        if b.degree_in(1) == 0 {
            // b is a nonzero polynomial in x alone with trivial content
            break MPoly::one(vars.clone());
        }
        let r = prem_y(&a, &b);
        if r.is_zero() {
            break b;
        }
        a = b;
        b = primitive_y(&r);
    };
    normalize(&(&MPoly::from_upoly(vars, 0, &c) * &prim))
}

/// Product of the distinct irreducible factors of `f`, normalized.
pub fn squarefree_part(f: &MPoly) -> MPoly {
    if f.is_zero() || f.is_constant() {
        return if f.is_zero() { f.clone() } else { MPoly::one(f.vars().clone()) };
    }
    if f.nvars() == 2 && f.degree_in(1) > 0 {
        if let Some(s) = squarefree_by_specialization(f) {
            return s;
        }
    }
    let mut g = f.clone();
    for i in 0..f.nvars() {
        g = gcd(&g, &f.derivative(i));
    }
    normalize(&f.div_exact(&g).expect("gcd divides"))
}

// If `f(x0, y)` is squarefree of full degree in `y` for some `x0`, the
// primitive part of `f` is squarefree and only the content needs work.
fn squarefree_by_specialization(f: &MPoly) -> Option<MPoly> {
    let dy = f.degree_in(1) as isize;
    let lc = f.coeffs_in(1).pop()?.to_upoly(0)?;
    let x0 = (1..=8).map(|k| Rat::from_integer(k.into())).find(|v| !lc.eval(v).is_zero())?;
    let u = f.specialize(0, &x0).to_upoly(1)?;
    if u.deg() != dy || u.gcd(&u.derivative()).deg() > 0 {
        return None;
    }
    let c = content_y(f);
    let prim = f.div_exact(&MPoly::from_upoly(f.vars().clone(), 0, &c)).ok()?;
    Some(normalize(&(&MPoly::from_upoly(f.vars().clone(), 0, &c.squarefree_part()) * &prim)))
}

/// Splits off the largest monomial factor: `f = x^a y^b * rest`.
pub fn split_monomial_content(f: &MPoly) -> (Vec<u32>, MPoly) {
    let exps: Vec<u32> = (0..f.nvars()).map(|i| f.valuation_in(i)).collect();
    if f.is_zero() {
        return (exps, f.clone());
    }
    let m = MPoly::from_terms(f.vars().clone(), [(exps.clone(), Rat::one())]);
    (exps, f.div_exact(&m).expect("monomial content divides"))
}

/// Whether `f` vanishes identically on the axis of variable `i`, i.e. every
/// term mentions some other variable.
pub fn divisible_by_var(f: &MPoly, i: usize) -> bool {
    !f.is_zero() && f.valuation_in(i) > 0
}
