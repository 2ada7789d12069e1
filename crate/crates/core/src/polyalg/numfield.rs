//! Real number fields `Q(theta)` with `theta` a real algebraic number.
//!
//! Elements are rational polynomials in `theta` reduced modulo the defining
//! polynomial `m` of `theta`. `m` is squarefree but need not be irreducible,
//! so zero testing goes through `gcd(a, m)` and the isolating interval of
//! `theta` (dynamic evaluation): `a(theta) = 0` iff `theta` is a root of the
//! gcd. Inverses are taken modulo the cofactor that keeps `theta` as a root.
//!
//! New roots are adjoined through a primitive element `psi = r + s*theta`,
//! so every field in play stays a simple extension of the rationals.

use super::algnum::{select_root, Real};
use super::mpoly::{var_list, MPoly};
use super::rat::{rat, Rat};
use super::resultant::resultant;
use super::upoly::UPoly;
use super::PolyError;
use num_traits::Zero;
use std::cmp::Ordering;

/// Element of a [`NumberField`]: a polynomial in the generator.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct KElem(UPoly);

impl KElem {
    pub fn rep(&self) -> &UPoly {
        &self.0
    }

    pub fn is_rational(&self) -> bool {
        self.0.is_constant()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        if self.0.is_constant() {
            Some(self.0.coeff(0))
        } else {
            None
        }
    }
}

#[derive(Clone, Debug)]
pub struct NumberField {
    modulus: UPoly,
    theta: Real,
}

impl NumberField {
    /// The rationals, presented as `Q(0)` with modulus `x`.
    pub fn rationals() -> Self {
        NumberField { modulus: UPoly::x(), theta: Real::zero() }
    }

    /// `Q(r)`.
    pub fn generated_by(r: &Real) -> Self {
        match r {
            Real::Rat(_) => NumberField::rationals(),
            Real::Alg(a) => NumberField { modulus: a.poly().clone(), theta: r.clone() },
        }
    }

    pub fn is_rationals(&self) -> bool {
        self.modulus.deg() <= 1
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }

    pub fn generator(&self) -> &Real {
        &self.theta
    }

    pub fn degree(&self) -> usize {
        self.modulus.deg().max(1) as usize
    }

    pub fn zero(&self) -> KElem {
        KElem(UPoly::zero())
    }

    pub fn one(&self) -> KElem {
        KElem(UPoly::one())
    }

    pub fn from_rat(&self, r: Rat) -> KElem {
        KElem(UPoly::constant(r))
    }

    pub fn from_i64(&self, v: i64) -> KElem {
        self.from_rat(rat(v))
    }

    pub fn theta(&self) -> KElem {
        self.reduce(UPoly::x())
    }

    pub fn reduce(&self, p: UPoly) -> KElem {
        if p.deg() < self.modulus.deg() {
            KElem(p)
        } else {
            KElem(p.rem(&self.modulus))
        }
    }

    pub fn add(&self, a: &KElem, b: &KElem) -> KElem {
        KElem(&a.0 + &b.0)
    }

    pub fn sub(&self, a: &KElem, b: &KElem) -> KElem {
        KElem(&a.0 - &b.0)
    }

    pub fn neg(&self, a: &KElem) -> KElem {
        KElem(-&a.0)
    }

    pub fn mul(&self, a: &KElem, b: &KElem) -> KElem {
        if a.0.is_constant() && b.0.is_constant() {
            return KElem(&a.0 * &b.0);
        }
        self.reduce(&a.0 * &b.0)
    }

    pub fn scale(&self, a: &KElem, r: &Rat) -> KElem {
        KElem(a.0.scale(r))
    }

    pub fn pow(&self, a: &KElem, k: u32) -> KElem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn theta_is_root_of(&self, g: &UPoly) -> bool {
        match &self.theta {
            Real::Rat(r) => g.eval(r).is_zero(),
            Real::Alg(a) => {
                let (lo, hi) = a.interval();
                g.sign_at(lo) != g.sign_at(hi)
            }
        }
    }

    /// Exact test `a(theta) == 0`.
    pub fn is_zero(&self, a: &KElem) -> bool {
        if a.0.is_zero() {
            return true;
        }
        if a.0.is_constant() {
            return false;
        }
        let g = a.0.gcd(&self.modulus);
        g.deg() >= 1 && self.theta_is_root_of(&g)
    }

    pub fn inv(&self, a: &KElem) -> Result<KElem, PolyError> {
        if self.is_zero(a) {
            return Err(PolyError::DivisionByZero);
        }
        if a.0.is_constant() {
            return Ok(KElem(UPoly::constant(a.0.coeff(0).recip())));
        }
        let g = a.0.gcd(&self.modulus);
        let m = if g.deg() >= 1 { self.modulus.div_exact(&g) } else { self.modulus.clone() };
        let (one, s, _) = a.0.ext_gcd(&m);
        debug_assert!(one.deg() == 0);
        Ok(self.reduce(s.scale(&one.coeff(0).recip())))
    }

    pub fn div(&self, a: &KElem, b: &KElem) -> Result<KElem, PolyError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Sign of `a(theta)`.
    pub fn sign(&self, a: &KElem) -> Ordering {
        if let Some(r) = a.as_rat() {
            return r.cmp(&Rat::zero());
        }
        if self.is_zero(a) {
            return Ordering::Equal;
        }
        match &self.theta {
            Real::Rat(r) => a.0.eval(r).cmp(&Rat::zero()),
            Real::Alg(t) => {
                let mut t = t.clone();
                loop {
                    let (lo, hi) = t.interval();
                    let (vlo, vhi) = a.0.eval_interval(lo, hi);
                    if vlo > Rat::zero() {
                        return Ordering::Greater;
                    }
                    if vhi < Rat::zero() {
                        return Ordering::Less;
                    }
                    t.bisect();
                }
            }
        }
    }

    /// Value of `a(theta)` as an exact real.
    pub fn to_real(&self, a: &KElem) -> Real {
        if let Some(r) = a.as_rat() {
            return Real::Rat(r);
        }
        let t = match &self.theta {
            Real::Rat(r) => return Real::Rat(a.0.eval(r)),
            Real::Alg(t) => t.clone(),
        };
        if self.is_zero(a) {
            return Real::zero();
        }
        // minimal-polynomial candidate: Res_t(m(t), x - a(t))
        let vars = var_list(&["x", "t"]);
        let mt = MPoly::from_upoly(vars.clone(), 1, &self.modulus);
        let at = MPoly::from_upoly(vars.clone(), 1, &a.0);
        let lin = &MPoly::var(vars, 0) - &at;
        let res = resultant(&mt, &lin, 1).expect("positive degree").to_upoly(0).expect("univariate");
        let mut t = t;
        let poly = a.0.clone();
        select_root(&res, |k| {
            if k > 0 {
                t.bisect();
            }
            let (lo, hi) = t.interval();
            poly.eval_interval(lo, hi)
        })
    }

    /// `p(v)` for a rational polynomial `p`.
    pub fn eval_rat_poly(&self, p: &UPoly, v: &KElem) -> KElem {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, v), &self.from_rat(c.clone()));
        }
        acc
    }

    pub fn to_f64(&self, a: &KElem) -> f64 {
        self.to_real(a).to_f64()
    }
}

/// An embedding of one field into another, given by the image of the old
/// generator.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub theta_image: KElem,
}

impl Embedding {
    pub fn identity(k: &NumberField) -> Self {
        Embedding { theta_image: k.theta() }
    }

    pub fn apply(&self, target: &NumberField, a: &KElem) -> KElem {
        if a.is_rational() {
            return a.clone();
        }
        target.eval_rat_poly(&a.0, &self.theta_image)
    }
}

/// Polynomials in one variable over a number field, lowest degree first.
pub type KPoly = Vec<KElem>;

/// Drops leading coefficients that vanish in the field.
pub fn kpoly_trim(k: &NumberField, p: &mut KPoly) {
    while let Some(last) = p.last() {
        if k.is_zero(last) {
            p.pop();
        } else {
            break;
        }
    }
}

pub fn kpoly_eval(k: &NumberField, p: &KPoly, v: &KElem) -> KElem {
    let mut acc = k.zero();
    for c in p.iter().rev() {
        acc = k.add(&k.mul(&acc, v), c);
    }
    acc
}

pub fn kpoly_derivative(k: &NumberField, p: &KPoly) -> KPoly {
    p.iter().enumerate().skip(1).map(|(i, c)| k.scale(c, &rat(i as i64))).collect()
}

fn kpoly_sub(k: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    let n = a.len().max(b.len());
    let z = k.zero();
    (0..n).map(|i| k.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect()
}

/// Division with remainder; `d` must be trimmed and nonzero.
pub fn kpoly_divrem(k: &NumberField, a: &KPoly, d: &KPoly) -> (KPoly, KPoly) {
    let mut r = a.clone();
    kpoly_trim(k, &mut r);
    let dn = d.len() - 1;
    if r.len() < d.len() {
        return (Vec::new(), r);
    }
    let inv = k.inv(&d[dn]).expect("trimmed divisor");
    let mut q = vec![k.zero(); r.len() - dn];
    for i in (0..q.len()).rev() {
        let coef = k.mul(&r[i + dn], &inv);
        for (j, dc) in d.iter().enumerate() {
            r[i + j] = k.sub(&r[i + j], &k.mul(&coef, dc));
        }
        q[i] = coef;
    }
    r.truncate(dn);
    kpoly_trim(k, &mut r);
    (q, r)
}

pub fn kpoly_monic(k: &NumberField, p: &KPoly) -> KPoly {
    let mut p = p.clone();
    kpoly_trim(k, &mut p);
    if let Some(lc) = p.last() {
        let inv = k.inv(lc).expect("trimmed");
        p = p.iter().map(|c| k.mul(c, &inv)).collect();
    }
    p
}

pub fn kpoly_gcd(k: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    let mut a = a.clone();
    let mut b = b.clone();
    kpoly_trim(k, &mut a);
    kpoly_trim(k, &mut b);
    while !b.is_empty() {
        let (_, r) = kpoly_divrem(k, &a, &b);
        a = b;
        b = r;
    }
    kpoly_monic(k, &a)
}

/// Yun's squarefree decomposition over a number field.
pub fn kpoly_squarefree(k: &NumberField, p: &KPoly) -> Vec<(KPoly, u32)> {
    let f = kpoly_monic(k, p);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let fp = kpoly_derivative(k, &f);
    let a0 = kpoly_gcd(k, &f, &fp);
    let mut b = kpoly_divrem(k, &f, &a0).0;
    let c = kpoly_divrem(k, &fp, &a0).0;
    let mut d = kpoly_sub(k, &c, &kpoly_derivative(k, &b));
    let mut i = 1;
    loop {
        let a = kpoly_gcd(k, &b, &d);
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        b = kpoly_divrem(k, &b, &a).0;
        if b.len() <= 1 {
            break;
        }
        let c = kpoly_divrem(k, &d, &a).0;
        d = kpoly_sub(k, &c, &kpoly_derivative(k, &b));
        i += 1;
    }
    out
}

/// A real root of a polynomial over `K`, living in a (possibly larger) field.
#[derive(Clone, Debug)]
pub struct AdjoinedRoot {
    pub field: NumberField,
    pub root: KElem,
    pub multiplicity: u32,
    pub embedding: Embedding,
}

/// All real roots of `p` (with multiplicity), each expressed in a simple
/// extension of `k` together with the embedding of `k` into it.
pub fn real_roots_over(k: &NumberField, p: &KPoly) -> Result<Vec<AdjoinedRoot>, PolyError> {
    let mut out = Vec::new();
    for (f, mult) in kpoly_squarefree(k, p) {
        if f.len() == 2 {
            let root = k.neg(&k.div(&f[0], &f[1])?);
            out.push(AdjoinedRoot { field: k.clone(), root, multiplicity: mult, embedding: Embedding::identity(k) });
            continue;
        }
        if f.iter().all(|c| c.is_rational()) {
            let u = UPoly::new(f.iter().map(|c| c.as_rat().unwrap()).collect());
            for r in Real::roots_of(&u) {
                out.push(adjoin(k, &f, r, mult)?.expect("root of a rational factor"));
            }
            continue;
        }
        // norm over Q: every real root of f is a root of Res_t(m(t), F(c, t))
        let norm = norm_of(k, &f)?;
        for r in Real::roots_of(&norm) {
            if let Some(root) = adjoin(k, &f, r, mult)? {
                out.push(root);
            }
        }
    }
    Ok(out)
}

// Expresses the real number `r` in an extension of `k`, returning it if it is
// a root of `f`.
fn adjoin(k: &NumberField, f: &KPoly, r: Real, mult: u32) -> Result<Option<AdjoinedRoot>, PolyError> {
    if let Real::Rat(q) = &r {
        let v = k.from_rat(q.clone());
        if !k.is_zero(&kpoly_eval(k, f, &v)) {
            return Ok(None);
        }
        return Ok(Some(AdjoinedRoot { field: k.clone(), root: v, multiplicity: mult, embedding: Embedding::identity(k) }));
    }
    if k.is_rationals() {
        let field = NumberField::generated_by(&r);
        let root = field.theta();
        let ok = field.is_zero(&kpoly_eval(&field, &embed_all(&field, &Embedding { theta_image: field.zero() }, f), &root));
        if !ok {
            return Ok(None);
        }
        let embedding = Embedding { theta_image: field.from_rat(k.generator().as_rat().cloned().unwrap_or_default()) };
        return Ok(Some(AdjoinedRoot { field, root, multiplicity: mult, embedding }));
    }
    let theta = k.generator().clone();
    let norm = norm_of(k, f)?;
    for s in [1i64, 2, -1, 3, -2, 5, -3, 7] {
        let psi = r.add(&theta.mul(&Real::from_i64(s)));
        let big = NumberField::generated_by(&psi);
        let psi_e = match &psi {
            Real::Rat(q) => big.from_rat(q.clone()),
            Real::Alg(_) => big.theta(),
        };
        if big.is_rationals() {
            // r = psi - s*theta already lies in k
            let v = k.sub(&k.from_rat(psi.as_rat().unwrap().clone()), &k.scale(&k.theta(), &rat(s)));
            if k.is_zero(&kpoly_eval(k, f, &v)) {
                return Ok(Some(AdjoinedRoot { field: k.clone(), root: v, multiplicity: mult, embedding: Embedding::identity(k) }));
            }
            return Ok(None);
        }
        // theta is a common root of m(t) and N(psi - s t); their gcd over
        // Q(psi) is linear for all but finitely many s
        let m_t: KPoly = k.modulus().coeffs().iter().map(|c| big.from_rat(c.clone())).collect();
        let lin: KPoly = vec![psi_e.clone(), big.from_i64(-s)];
        let n_t = compose_rat_poly_kpoly(&big, &norm, &lin);
        let g = kpoly_gcd(&big, &m_t, &n_t);
        if g.len() != 2 {
            continue;
        }
        let theta_img = big.neg(&g[0]);
        let emb = Embedding { theta_image: theta_img.clone() };
        let root = big.sub(&psi_e, &big.scale(&theta_img, &rat(s)));
        let f_big = embed_all(&big, &emb, f);
        if !big.is_zero(&kpoly_eval(&big, &f_big, &root)) {
            return Ok(None);
        }
        return Ok(Some(AdjoinedRoot { field: big, root, multiplicity: mult, embedding: emb }));
    }
    Err(PolyError::PrimitiveElement)
}

fn norm_of(k: &NumberField, f: &KPoly) -> Result<UPoly, PolyError> {
    let vars = var_list(&["c", "t"]);
    let mt = MPoly::from_upoly(vars.clone(), 1, k.modulus());
    let mut fct = MPoly::zero(vars.clone());
    for (j, coef) in f.iter().enumerate() {
        let cj = MPoly::from_upoly(vars.clone(), 1, coef.rep());
        fct = &fct + &cj.mul_monomial(&super::mpoly::Monomial::new(vec![j as u32, 0]));
    }
    if fct.degree_in(1) == 0 {
        return Ok(fct.to_upoly(0).expect("univariate"));
    }
    Ok(resultant(&mt, &fct, 1)?.to_upoly(0).expect("univariate"))
}

fn compose_rat_poly_kpoly(k: &NumberField, p: &UPoly, inner: &KPoly) -> KPoly {
    let mut acc: KPoly = Vec::new();
    for c in p.coeffs().iter().rev() {
        acc = kpoly_mul(k, &acc, inner);
        if acc.is_empty() {
            acc.push(k.zero());
        }
        acc[0] = k.add(&acc[0], &k.from_rat(c.clone()));
    }
    acc
}

pub fn kpoly_mul(k: &NumberField, a: &KPoly, b: &KPoly) -> KPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![k.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = k.add(&out[i + j], &k.mul(x, y));
        }
    }
    out
}

pub fn embed_all(target: &NumberField, e: &Embedding, p: &KPoly) -> KPoly {
    p.iter().map(|c| e.apply(target, c)).collect()
}

impl Default for NumberField {
    fn default() -> Self {
        NumberField::rationals()
    }
}
