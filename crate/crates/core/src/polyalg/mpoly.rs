//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose order is graded
//! lexicographic (total degree first). Iteration therefore walks terms from
//! the lowest total degree upwards, which is what truncation and lowest-form
//! extraction want.

use super::rat::{fmt_rat, rat_to_f64, Rat};
use super::upoly::UPoly;
use super::PolyError;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Ordered list of variable names shared between polynomials.
pub type VarList = Arc<[String]>;

pub fn var_list<S: AsRef<str>>(names: &[S]) -> VarList {
    names.iter().map(|s| s.as_ref().to_string()).collect::<Vec<_>>().into()
}

/// Exponent vector, one entry per ambient variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|e| e % 2 == 0)
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e > 0`.
    pub fn pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over a fixed ordered variable list. No zero coefficient is
/// ever stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    vars: VarList,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    pub fn zero(vars: VarList) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: VarList, c: Rat) -> Self {
        let mut p = MPoly::zero(vars);
        let n = p.nvars();
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn one(vars: VarList) -> Self {
        MPoly::constant(vars, Rat::one())
    }

    pub fn var(vars: VarList, i: usize) -> Self {
        Self::monomial(vars, Monomial::var_of(i), Rat::one())
    }

    pub fn monomial(vars: VarList, m: impl Into<MonomialSpec>, c: Rat) -> Self {
        let mut p = MPoly::zero(vars);
        let n = p.nvars();
        let m = m.into().build(n);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(vars: VarList, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = MPoly::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.nvars(), "exponent vector length");
            p.add_term(Monomial(e), c);
        }
        p
    }

    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn same_vars(&self, other: &MPoly) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_vars(&self, other: &MPoly) -> Result<(), PolyError> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(PolyError::VariableMismatch {
                left: self.vars.to_vec(),
                right: other.vars.to_vec(),
            })
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rat)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Monomial::one(self.nvars()))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Lowest total degree of a nonzero term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// Lowest exponent of variable `i` over all terms (0 for the zero polynomial).
    pub fn valuation_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).min().unwrap_or(0)
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, PolyError> {
        self.mul_impl(other, None)
    }

    /// Product with every monomial of total degree above `d` discarded.
    pub fn checked_truncmul(&self, other: &MPoly, d: u32) -> Result<MPoly, PolyError> {
        self.mul_impl(other, Some(d))
    }

    fn mul_impl(&self, other: &MPoly, cap: Option<u32>) -> Result<MPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = MPoly::zero(self.vars.clone());
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            if cap.map_or(false, |d| da > d) {
                break;
            }
            for (mb, cb) in &other.terms {
                if let Some(d) = cap {
                    // other's terms are in increasing degree
                    if da + mb.degree() > d {
                        break;
                    }
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.vars.clone());
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .take_while(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MPoly {
        self.pow_impl(k, None)
    }

    pub fn pow_trunc(&self, k: u32, d: u32) -> MPoly {
        self.pow_impl(k, Some(d))
    }

    fn pow_impl(&self, mut k: u32, cap: Option<u32>) -> MPoly {
        let mut result = MPoly::one(self.vars.clone());
        let mut base = match cap {
            Some(d) => self.truncate(d),
            None => self.clone(),
        };
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_impl(&base, cap).expect("same vars");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_impl(&base, cap).expect("same vars");
            }
        }
        result
    }

    /// Homogeneous components in increasing degree; empty for zero.
    pub fn homogeneous_decompose(&self) -> Vec<(u32, MPoly)> {
        let mut out: Vec<(u32, MPoly)> = Vec::new();
        for (m, c) in &self.terms {
            let d = m.degree();
            match out.last_mut() {
                Some((deg, form)) if *deg == d => {
                    form.terms.insert(m.clone(), c.clone());
                }
                _ => {
                    let mut form = MPoly::zero(self.vars.clone());
                    form.terms.insert(m.clone(), c.clone());
                    out.push((d, form));
                }
            }
        }
        out
    }

    /// The nonzero homogeneous component of minimal degree.
    pub fn lowest_form(&self) -> Result<(u32, MPoly), PolyError> {
        self.homogeneous_decompose().into_iter().next().ok_or(PolyError::NoLowestForm)
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.order(), self.total_degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    pub fn derivative(&self, i: usize) -> MPoly {
        let mut out = MPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[i] -= 1;
            out.terms.insert(Monomial(exps), c * Rat::from_integer(e.into()));
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars());
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(point)
                    .fold(rat_to_f64(c), |acc, (&e, &x)| acc * x.powi(e as i32))
            })
            .sum()
    }

    /// Substitutes the rational `value` for variable `i`; the variable list is kept.
    pub fn specialize(&self, i: usize, value: &Rat) -> MPoly {
        let mut out = MPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut exps = m.0.clone();
            exps[i] = 0;
            let factor = if e == 0 { Rat::one() } else { num_traits::pow(value.clone(), e as usize) };
            out.add_term(Monomial(exps), c * factor);
        }
        out
    }

    /// Restriction to the `i`-th coordinate axis (all other variables set to zero).
    pub fn restrict_to_axis(&self, i: usize) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `self` with variable `i` replaced by `c * x_i`.
    pub fn scale_var(&self, i: usize, c: &Rat) -> MPoly {
        let mut out = MPoly::zero(self.vars.clone());
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * num_traits::pow(c.clone(), m.0[i] as usize));
        }
        out
    }

    /// Coefficients with respect to variable `i`: `self = sum_k out[k] * x_i^k`.
    pub fn coeffs_in(&self, i: usize) -> Vec<MPoly> {
        let deg = self.degree_in(i) as usize;
        let mut out = vec![MPoly::zero(self.vars.clone()); if self.is_zero() { 0 } else { deg + 1 }];
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            let mut exps = m.0.clone();
            exps[i] = 0;
            out[e].terms.insert(Monomial(exps), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(vars: VarList, i: usize, coeffs: &[MPoly]) -> MPoly {
        let mut out = MPoly::zero(vars);
        for (k, p) in coeffs.iter().enumerate() {
            for (m, c) in &p.terms {
                let mut exps = m.0.clone();
                exps[i] += k as u32;
                out.add_term(Monomial(exps), c.clone());
            }
        }
        out
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.degree_in(i) > 0).collect()
    }

    /// Converts to a dense univariate polynomial in variable `i`, provided no
    /// other variable occurs.
    pub fn to_upoly(&self, i: usize) -> Option<UPoly> {
        let mut coeffs = vec![Rat::zero(); self.degree_in(i) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            coeffs[m.0[i] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn from_upoly(vars: VarList, i: usize, u: &UPoly) -> MPoly {
        let n = vars.len();
        let mut out = MPoly::zero(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            out.add_term(Monomial::var(n, i, k as u32), c.clone());
        }
        out
    }

    /// Exact quotient `self / divisor`; fails if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &MPoly) -> Result<MPoly, PolyError> {
        self.check_vars(divisor)?;
        let (lm, lc) = match divisor.leading_term() {
            Some((m, c)) => (m.clone(), c.clone()),
            None => return Err(PolyError::DivisionByZero),
        };
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.vars.clone());
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return Err(PolyError::NotDivisible);
            }
            let qm = lm.quotient_of(m);
            let qc = c / &lc;
            for (dm, dc) in &divisor.terms {
                rem.add_term(dm.mul(&qm), -(dc * &qc));
            }
            quot.add_term(qm, qc);
        }
        Ok(quot)
    }

    /// Relabels variables: variable `i` of `self` becomes variable `perm[i]`
    /// of the result, which lives over `new_vars`.
    pub fn permute(&self, perm: &[usize], new_vars: VarList) -> MPoly {
        assert_eq!(perm.len(), self.nvars());
        let mut out = MPoly::zero(new_vars);
        let n = out.nvars();
        for (m, c) in &self.terms {
            let mut exps = vec![0; n];
            for (i, &e) in m.0.iter().enumerate() {
                exps[perm[i]] += e;
            }
            out.add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Re-expresses the polynomial over a different variable list of the same length.
    pub fn with_vars(&self, vars: VarList) -> MPoly {
        assert_eq!(vars.len(), self.nvars());
        MPoly { vars, terms: self.terms.clone() }
    }

    /// Maximum of `|coefficient|` over all terms.
    pub fn max_abs_coeff(&self) -> Rat {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Rat::zero)
    }
}

/// Helper so `MPoly::monomial` accepts either a full exponent vector or a
/// single-variable power.
pub enum MonomialSpec {
    Full(Monomial),
    VarPow(usize, u32),
}

impl MonomialSpec {
    fn build(self, n: usize) -> Monomial {
        match self {
            MonomialSpec::Full(m) => {
                assert_eq!(m.0.len(), n);
                m
            }
            MonomialSpec::VarPow(i, e) => Monomial::var(n, i, e),
        }
    }
}

impl From<Monomial> for MonomialSpec {
    fn from(m: Monomial) -> Self {
        MonomialSpec::Full(m)
    }
}

impl Monomial {
    fn var_of(i: usize) -> MonomialSpec {
        MonomialSpec::VarPow(i, 1)
    }

    pub fn power_of(i: usize, e: u32) -> MonomialSpec {
        MonomialSpec::VarPow(i, e)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", fmt_rat(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_rat(&abs), factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("MPoly addition over different variable lists")
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("MPoly subtraction over different variable lists")
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("MPoly multiplication over different variable lists")
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}
