//! Real root isolation.
//!
//! The primary method is Sturm-sequence bisection on `(-B, B]`, `B` the
//! Cauchy bound. A Descartes (Vincent-Collins-Akritas) bisection is kept as an
//! independent second route; both feed the same oracle tests. Isolation always
//! works on the squarefree part, so every reported root is simple.

use super::mpoly::MPoly;
use super::rat::{rat, Rat};
use super::upoly::UPoly;
use super::PolyError;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Isolating interval of one real root. `lo == hi` marks an exact rational
/// root; otherwise the root lies in the open interval `(lo, hi)` and the
/// squarefree defining polynomial is nonzero at both ends.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rat) -> bool {
        if self.is_exact() {
            x == &self.lo
        } else {
            &self.lo < x && x < &self.hi
        }
    }

    /// Halves the interval once using the sign of the squarefree polynomial `p`.
    pub fn bisect(&mut self, p: &UPoly) {
        if self.is_exact() {
            return;
        }
        let mid = (&self.lo + &self.hi) / rat(2);
        let sm = p.sign_at(&mid);
        if sm == Ordering::Equal {
            self.lo = mid.clone();
            self.hi = mid;
            return;
        }
        if sm == p.sign_at(&self.lo) {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Bisects until the width is at most `w`.
    pub fn refine_to(&mut self, p: &UPoly, w: &Rat) {
        while !self.is_exact() && &self.width() > w {
            self.bisect(p);
        }
    }
}

/// Sturm chain of a squarefree polynomial.
pub struct SturmSequence {
    seq: Vec<UPoly>,
}

impl SturmSequence {
    pub fn new(p: &UPoly) -> Self {
        let mut seq = vec![p.clone()];
        if p.deg() > 0 {
            seq.push(p.derivative());
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                // positive rescaling keeps signs and tames coefficient growth
                let r = -&r;
                let scale = r.lc().abs().recip();
                seq.push(r.scale(&scale));
            }
        }
        SturmSequence { seq }
    }

    pub fn variations(&self, x: &Rat) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for s in &self.seq {
            let sg = s.sign_at(x);
            if sg == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && sg != last {
                count += 1;
            }
            last = sg;
        }
        count
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Rat, b: &Rat) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Disjoint isolating intervals for all real roots of `p`, sorted increasingly.
pub fn isolate_real_roots(p: &UPoly) -> Vec<RootInterval> {
    assert!(!p.is_zero(), "isolate_real_roots of the zero polynomial");
    let s = p.squarefree_part();
    if s.deg() <= 0 {
        return Vec::new();
    }
    let sturm = SturmSequence::new(&s);
    let b = s.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let c = sturm.count(&lo, &hi);
        if c == 0 {
            continue;
        }
        if c == 1 {
            if s.eval(&hi).is_zero() {
                out.push(RootInterval { lo: hi.clone(), hi });
            } else {
                out.push(tidy_lower(&s, &sturm, lo, hi));
            }
            continue;
        }
        let mid = (&lo + &hi) / rat(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

// A single root in (lo, hi) with p(hi) != 0; move `lo` off a root of p.
fn tidy_lower(s: &UPoly, sturm: &SturmSequence, mut lo: Rat, mut hi: Rat) -> RootInterval {
    while s.eval(&lo).is_zero() {
        let mid = (&lo + &hi) / rat(2);
        if s.eval(&mid).is_zero() {
            return RootInterval { lo: mid.clone(), hi: mid };
        }
        if sturm.count(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootInterval { lo, hi }
}

/// Real roots of a polynomial that mentions at most one variable.
pub fn isolate_real_roots_mpoly(p: &MPoly) -> Result<Vec<RootInterval>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let vars = p.support_vars();
    if vars.len() > 1 {
        return Err(PolyError::NotUnivariate);
    }
    let u = p.to_upoly(vars.first().copied().unwrap_or(0)).ok_or(PolyError::NotUnivariate)?;
    Ok(isolate_real_roots(&u))
}

/// Number of sign variations in a coefficient sequence.
fn sign_variations(c: &[Rat]) -> usize {
    let mut last: Option<bool> = None;
    let mut n = 0;
    for v in c {
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(l) = last {
            if l != pos {
                n += 1;
            }
        }
        last = Some(pos);
    }
    n
}

/// Descartes bound on the number of roots of `p` in the open interval `(a, b)`.
fn descartes_bound(p: &UPoly, a: &Rat, b: &Rat) -> usize {
    // r(y) = p(a + (b - a) y) maps (0, 1) onto (a, b); q(x) = rev(r)(x + 1)
    let r = p.scale_var(&(b - a)).shift(&(a / (b - a)));
    let q = r.reverse().shift(&rat(1));
    sign_variations(q.coeffs())
}

/// Same contract as [`isolate_real_roots`], via Descartes' rule of signs.
pub fn isolate_real_roots_descartes(p: &UPoly) -> Vec<RootInterval> {
    assert!(!p.is_zero());
    let s = p.squarefree_part();
    if s.deg() <= 0 {
        return Vec::new();
    }
    let b = s.root_bound();
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        match descartes_bound(&s, &lo, &hi) {
            0 => {}
            1 => out.push(RootInterval { lo, hi }),
            _ => {
                let mid = (&lo + &hi) / rat(2);
                if s.eval(&mid).is_zero() {
                    out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat::ratio;

    fn check_both(p: &UPoly) -> Vec<RootInterval> {
        let a = isolate_real_roots(p);
        let b = isolate_real_roots_descartes(p);
        assert_eq!(a.len(), b.len(), "sturm vs descartes on {}", p);
        a
    }

    #[test]
    fn sqrt_two() {
        let r = check_both(&UPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(r.len(), 2);
        let q = UPoly::from_i64(&[-2, 0, 1]);
        for iv in &r {
            assert_ne!(q.sign_at(&iv.lo), q.sign_at(&iv.hi));
        }
        assert!(r[0].hi <= rat(0) && r[1].lo >= rat(0));
    }

    #[test]
    fn three_rational_roots() {
        let p = &(&UPoly::from_i64(&[-1, 1]) * &UPoly::from_i64(&[-2, 1])) * &UPoly::from_i64(&[-3, 1]);
        let r = check_both(&p);
        assert_eq!(r.len(), 3);
        for (iv, k) in r.iter().zip(1..) {
            assert!(iv.contains(&rat(k)) || (iv.lo <= rat(k) && rat(k) <= iv.hi));
        }
    }

    #[test]
    fn no_real_roots() {
        assert!(check_both(&UPoly::from_i64(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn root_at_bisection_point_is_exact() {
        // roots 0 and 1/3: 0 is the first midpoint of (-B, B]
        let p = &UPoly::x() * &UPoly::new(vec![ratio(-1, 3), rat(1)]);
        let r = isolate_real_roots(&p);
        assert_eq!(r.len(), 2);
        assert!(r[0].is_exact() && r[0].lo.is_zero());
        assert!(!r[1].is_exact() || r[1].lo == ratio(1, 3));
        if !r[1].is_exact() {
            assert!(!p.eval(&r[1].lo).is_zero());
        }
    }

    #[test]
    fn refinement_keeps_root() {
        let p = UPoly::from_i64(&[-2, 0, 1]);
        let mut iv = isolate_real_roots(&p).pop().unwrap();
        iv.refine_to(&p, &ratio(1, 1000));
        assert!(iv.lo < ratio(1415, 1000) && iv.hi > ratio(1414, 1000));
    }

    #[test]
    fn multivariate_wrapper() {
        let v = crate::polyalg::mpoly::var_list(&["x", "y"]);
        let p = MPoly::from_terms(v.clone(), vec![(vec![0, 2], rat(1)), (vec![0, 0], rat(-2))]);
        assert_eq!(isolate_real_roots_mpoly(&p).unwrap().len(), 2);
        let q = MPoly::from_terms(v, vec![(vec![1, 1], rat(1))]);
        assert!(matches!(isolate_real_roots_mpoly(&q), Err(PolyError::NotUnivariate)));
    }
}
