//! Exact real numbers: rationals and real algebraic numbers.
//!
//! An [`AlgNum`] is a squarefree rational polynomial together with an open
//! rational interval holding exactly one of its roots. Construction always
//! detects rational roots and returns them as [`Real::Rat`], so every stored
//! `AlgNum` is irrational. That makes zero tests trivial and equality a gcd
//! test followed by interval refinement.

use super::mpoly::{var_list, MPoly};
use super::rat::{fmt_rat, rat, rat_to_f64, simplest_between, Rat};
use super::resultant::resultant;
use super::roots::{isolate_real_roots, RootInterval};
use super::upoly::{interval_mul, UPoly};
use super::PolyError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An irrational real algebraic number.
#[derive(Clone, Debug)]
pub struct AlgNum {
    poly: UPoly,
    lo: Rat,
    hi: Rat,
}

/// An exact real number.
#[derive(Clone, Debug)]
pub enum Real {
    Rat(Rat),
    Alg(AlgNum),
}

impl AlgNum {
    /// Defining polynomial (squarefree, monic).
    pub fn poly(&self) -> &UPoly {
        &self.poly
    }

    pub fn interval(&self) -> (&Rat, &Rat) {
        (&self.lo, &self.hi)
    }

    pub(crate) fn bisect(&mut self) {
        let mut iv = RootInterval { lo: self.lo.clone(), hi: self.hi.clone() };
        iv.bisect(&self.poly);
        if iv.is_exact() {
            // cannot happen for an irrational root; keep the old interval
            debug_assert!(false, "rational root inside AlgNum interval");
            return;
        }
        self.lo = iv.lo;
        self.hi = iv.hi;
    }

    fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    fn refine_below(&mut self, w: &Rat) {
        while &self.width() > w {
            self.bisect();
        }
    }

    /// Refines until zero is outside the closed interval.
    fn separated_from(&self, r: &Rat) -> AlgNum {
        let mut a = self.clone();
        while &a.lo <= r && r <= &a.hi {
            a.bisect();
        }
        a
    }

    pub fn sign(&self) -> Ordering {
        let a = self.separated_from(&Rat::zero());
        if a.lo.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        let scale = a.lo.abs().max(a.hi.abs()).max(Rat::one());
        let w = scale * Rat::new(BigInt::one(), BigInt::one() << 60u32);
        a.refine_below(&w);
        rat_to_f64(&((&a.lo + &a.hi) / rat(2)))
    }

    /// Closed rational enclosure of width at most `w`.
    pub fn enclosure(&self, w: &Rat) -> (Rat, Rat) {
        let mut a = self.clone();
        a.refine_below(w);
        (a.lo, a.hi)
    }

    fn cmp_rat(&self, r: &Rat) -> Ordering {
        let a = self.separated_from(r);
        if r < &a.lo {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn cmp_alg(&self, other: &AlgNum) -> Ordering {
        let g = self.poly.gcd(&other.poly);
        let mut a = self.clone();
        let mut b = other.clone();
        let shared = g.deg() >= 1 && g.sign_at(&a.lo) != g.sign_at(&a.hi);
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            if shared && b.lo < a.lo && a.hi < b.hi {
                // a is a root of b's polynomial inside b's isolating interval
                return Ordering::Equal;
            }
            if shared {
                a.bisect();
            } else if a.width() >= b.width() {
                a.bisect();
            } else {
                b.bisect();
            }
        }
    }

    fn neg(&self) -> AlgNum {
        let p = self.poly.reflect().monic();
        AlgNum { poly: p, lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    fn recip(&self) -> AlgNum {
        let a = self.separated_from(&Rat::zero());
        let p = a.poly.reverse().monic();
        AlgNum { poly: p, lo: a.hi.recip(), hi: a.lo.recip() }
    }

    fn add_rat(&self, r: &Rat) -> AlgNum {
        AlgNum { poly: self.poly.shift(&-r).monic(), lo: &self.lo + r, hi: &self.hi + r }
    }

    fn mul_rat(&self, r: &Rat) -> AlgNum {
        debug_assert!(!r.is_zero());
        let poly = self.poly.scale_var(&r.recip()).monic();
        let (lo, hi) = if r.is_positive() { (&self.lo * r, &self.hi * r) } else { (&self.hi * r, &self.lo * r) };
        AlgNum { poly, lo, hi }
    }
}

/// Picks the root of `r` that the shrinking enclosure produced by `step`
/// singles out. `step(k)` must return a closed interval containing the true
/// value, shrinking towards it as `k` grows.
pub(crate) fn select_root(r: &UPoly, mut step: impl FnMut(usize) -> (Rat, Rat)) -> Real {
    let s = r.squarefree_part();
    let roots = isolate_real_roots(&s);
    for k in 0.. {
        let (lo, hi) = step(k);
        let hits: Vec<&RootInterval> = roots
            .iter()
            .filter(|iv| if iv.is_exact() { lo <= iv.lo && iv.lo <= hi } else { iv.lo < hi && lo < iv.hi })
            .collect();
        if hits.len() == 1 {
            return Real::from_root(&s, hits[0].clone());
        }
        assert!(!hits.is_empty(), "enclosure misses every root of the resultant");
    }
    unreachable!()
}

impl Real {
    pub fn zero() -> Real {
        Real::Rat(Rat::zero())
    }

    pub fn from_i64(v: i64) -> Real {
        Real::Rat(rat(v))
    }

    /// The root of `p` isolated by `iv` (which must isolate it for the
    /// squarefree part of `p`).
    pub fn from_root(p: &UPoly, iv: RootInterval) -> Real {
        if iv.is_exact() {
            return Real::Rat(iv.lo);
        }
        let s = p.squarefree_part();
        if s.deg() == 1 {
            return Real::Rat(-s.coeff(0) / s.coeff(1));
        }
        // rational roots have denominators dividing the leading coefficient;
        // below width 1/lc^2 the simplest fraction in the interval is the only
        // candidate
        let ints = s.primitive_integer();
        let lc = Rat::from_integer(ints.last().unwrap().abs());
        let w = (&lc * &lc).recip();
        let mut iv = iv;
        iv.refine_to(&s, &w);
        if iv.is_exact() {
            return Real::Rat(iv.lo);
        }
        let cand = simplest_between(&iv.lo, &iv.hi);
        if s.eval(&cand).is_zero() {
            return Real::Rat(cand);
        }
        Real::Alg(AlgNum { poly: s, lo: iv.lo, hi: iv.hi })
    }

    /// All real roots of `p`, increasing.
    pub fn roots_of(p: &UPoly) -> Vec<Real> {
        let s = p.squarefree_part();
        isolate_real_roots(&s).into_iter().map(|iv| Real::from_root(&s, iv)).collect()
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        match self {
            Real::Rat(r) => Some(r),
            Real::Alg(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Real::Rat(r) if r.is_zero())
    }

    pub fn sign(&self) -> Ordering {
        match self {
            Real::Rat(r) => r.cmp(&Rat::zero()),
            Real::Alg(a) => a.sign(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Rat(r) => rat_to_f64(r),
            Real::Alg(a) => a.to_f64(),
        }
    }

    /// Closed rational enclosure of width at most `w`.
    pub fn enclosure(&self, w: &Rat) -> (Rat, Rat) {
        match self {
            Real::Rat(r) => (r.clone(), r.clone()),
            Real::Alg(a) => a.enclosure(w),
        }
    }

    pub fn neg(&self) -> Real {
        match self {
            Real::Rat(r) => Real::Rat(-r.clone()),
            Real::Alg(a) => Real::Alg(a.neg()),
        }
    }

    pub fn add(&self, other: &Real) -> Real {
        match (self, other) {
            (Real::Rat(a), Real::Rat(b)) => Real::Rat(a + b),
            (Real::Alg(a), Real::Rat(r)) | (Real::Rat(r), Real::Alg(a)) => Real::Alg(a.add_rat(r)),
            (Real::Alg(a), Real::Alg(b)) => {
                // Res_y(p(y), q(x - y)) vanishes at every sum of roots
                let vars = var_list(&["x", "y"]);
                let py = MPoly::from_upoly(vars.clone(), 1, &a.poly);
                let x_minus_y = &MPoly::var(vars.clone(), 0) - &MPoly::var(vars.clone(), 1);
                let qxy = compose_mpoly(&b.poly, &x_minus_y);
                let r = resultant(&py, &qxy, 1).expect("positive degrees").to_upoly(0).expect("univariate");
                let (mut a, mut b) = (a.clone(), b.clone());
                select_root(&r, |k| {
                    if k > 0 {
                        a.bisect();
                        b.bisect();
                    }
                    (&a.lo + &b.lo, &a.hi + &b.hi)
                })
            }
        }
    }

    pub fn sub(&self, other: &Real) -> Real {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Real) -> Real {
        match (self, other) {
            (Real::Rat(a), Real::Rat(b)) => Real::Rat(a * b),
            (Real::Alg(a), Real::Rat(r)) | (Real::Rat(r), Real::Alg(a)) => {
                if r.is_zero() {
                    Real::zero()
                } else {
                    Real::Alg(a.mul_rat(r))
                }
            }
            (Real::Alg(a), Real::Alg(b)) => {
                // Res_y(p(y), y^n q(x / y)) vanishes at every product of roots
                let vars = var_list(&["x", "y"]);
                let py = MPoly::from_upoly(vars.clone(), 1, &a.poly);
                let n = b.poly.deg() as u32;
                let homog = MPoly::from_terms(
                    vars,
                    b.poly.coeffs().iter().enumerate().map(|(k, c)| (vec![k as u32, n - k as u32], c.clone())),
                );
                let r = resultant(&py, &homog, 1).expect("positive degrees").to_upoly(0).expect("univariate");
                let (mut a, mut b) = (a.clone(), b.clone());
                select_root(&r, |k| {
                    if k > 0 {
                        a.bisect();
                        b.bisect();
                    }
                    interval_mul(&(a.lo.clone(), a.hi.clone()), &(b.lo.clone(), b.hi.clone()))
                })
            }
        }
    }

    pub fn recip(&self) -> Result<Real, PolyError> {
        match self {
            Real::Rat(r) if r.is_zero() => Err(PolyError::DivisionByZero),
            Real::Rat(r) => Ok(Real::Rat(r.recip())),
            Real::Alg(a) => Ok(Real::Alg(a.recip())),
        }
    }

    pub fn div(&self, other: &Real) -> Result<Real, PolyError> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn abs(&self) -> Real {
        if self.sign() == Ordering::Less {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Exact total order.
    pub fn cmp_exact(&self, other: &Real) -> Ordering {
        match (self, other) {
            (Real::Rat(a), Real::Rat(b)) => a.cmp(b),
            (Real::Alg(a), Real::Rat(r)) => a.cmp_rat(r),
            (Real::Rat(r), Real::Alg(a)) => a.cmp_rat(r).reverse(),
            (Real::Alg(a), Real::Alg(b)) => a.cmp_alg(b),
        }
    }

    pub fn pow(&self, k: u32) -> Real {
        let mut acc = Real::from_i64(1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// `p(e)` for a univariate `p` and polynomial argument `e`.
pub fn compose_mpoly(p: &UPoly, e: &MPoly) -> MPoly {
    let mut acc = MPoly::zero(e.vars().clone());
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * e) + &MPoly::constant(e.vars().clone(), c.clone());
    }
    acc
}

impl PartialEq for Real {
    fn eq(&self, other: &Real) -> bool {
        self.cmp_exact(other) == Ordering::Equal
    }
}

impl Eq for Real {}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        Some(self.cmp_exact(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Real) -> Ordering {
        self.cmp_exact(other)
    }
}

impl From<Rat> for Real {
    fn from(r: Rat) -> Real {
        Real::Rat(r)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Rat(r) => write!(f, "{}", fmt_rat(r)),
            Real::Alg(a) => write!(
                f,
                "root of {} in ({}, {}) ~ {}",
                a.poly,
                fmt_rat(&a.lo),
                fmt_rat(&a.hi),
                a.to_f64()
            ),
        }
    }
}
