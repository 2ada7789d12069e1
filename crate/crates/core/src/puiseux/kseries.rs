//! Bivariate polynomials and truncated power series over a number field.

use crate::polyalg::numfield::{Embedding, KElem, NumberField};
use crate::polyalg::rat::rat;
use crate::polyalg::{MPoly, UPoly};

/// Replaces elements that vanish in the field by the canonical zero.
pub fn clean(k: &NumberField, c: KElem) -> KElem {
    if c.rep().is_zero() {
        return c;
    }
    if !c.is_rational() && k.is_zero(&c) {
        return k.zero();
    }
    c
}

pub fn is_zero(c: &KElem) -> bool {
    c.rep().is_zero()
}

/// `rows[j][i]` is the coefficient of `x^i y^j`; every stored coefficient is
/// cleaned, trailing zeros are trimmed.
#[derive(Clone, Debug)]
pub struct KBiv {
    pub rows: Vec<Vec<KElem>>,
}

impl KBiv {
    pub fn from_mpoly(k: &NumberField, f: &MPoly) -> KBiv {
        assert_eq!(f.nvars(), 2);
        let mut rows: Vec<Vec<KElem>> = vec![Vec::new(); f.degree_in(1) as usize + 1];
        for (m, c) in f.terms() {
            let (i, j) = (m.exps()[0] as usize, m.exps()[1] as usize);
            let row = &mut rows[j];
            if row.len() <= i {
                row.resize(i + 1, k.zero());
            }
            row[i] = k.from_rat(c.clone());
        }
        let mut g = KBiv { rows };
        g.trim();
        g
    }

    fn trim(&mut self) {
        for row in &mut self.rows {
            while row.last().is_some_and(is_zero) {
                row.pop();
            }
        }
        while self.rows.last().is_some_and(|r| r.is_empty()) {
            self.rows.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn deg_y(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<&KElem> {
        self.rows.get(j).and_then(|r| r.get(i)).filter(|c| !is_zero(c))
    }

    /// Smallest `i` with a nonzero coefficient in row `j`.
    pub fn min_i(&self, j: usize) -> Option<usize> {
        self.rows.get(j)?.iter().position(|c| !is_zero(c))
    }

    /// Lowest power of `y` present.
    pub fn y_valuation(&self) -> usize {
        (0..self.rows.len()).find(|&j| self.min_i(j).is_some()).unwrap_or(0)
    }

    /// Lowest power of `x` present.
    pub fn x_valuation(&self) -> usize {
        (0..self.rows.len()).filter_map(|j| self.min_i(j)).min().unwrap_or(0)
    }

    pub fn divide_x_power(&mut self, a: usize) {
        for row in &mut self.rows {
            if !row.is_empty() {
                row.drain(0..a.min(row.len()));
            }
        }
        self.trim();
    }

    pub fn embed(&self, target: &NumberField, emb: &Embedding) -> KBiv {
        KBiv { rows: self.rows.iter().map(|r| r.iter().map(|c| emb.apply(target, c)).collect()).collect() }
    }

    /// `G(x^q, x^p (c + y)) / x^L` with `L` the largest power of `x` dividing it.
    pub fn substitute(&self, k: &NumberField, q: u32, p: u32, c: &KElem) -> KBiv {
        let jmax = self.rows.len();
        let mut cpow = vec![k.one()];
        for _ in 1..jmax {
            cpow.push(k.mul(cpow.last().unwrap(), c));
        }
        let mut out: Vec<Vec<KElem>> = vec![Vec::new(); jmax];
        for (j, row) in self.rows.iter().enumerate() {
            for (i, a) in row.iter().enumerate() {
                if is_zero(a) {
                    continue;
                }
                let xe = q as usize * i + p as usize * j;
                let mut binom = rat(1);
                for l in 0..=j {
                    // binom = C(j, l)
                    let term = k.scale(&k.mul(a, &cpow[j - l]), &binom);
                    let dst = &mut out[l];
                    if dst.len() <= xe {
                        dst.resize(xe + 1, k.zero());
                    }
                    dst[xe] = k.add(&dst[xe], &term);
                    binom = binom * rat((j - l) as i64) / rat(l as i64 + 1);
                }
            }
        }
        for row in &mut out {
            for c in row.iter_mut() {
                *c = clean(k, std::mem::replace(c, k.zero()));
            }
        }
        let mut g = KBiv { rows: out };
        g.trim();
        let l = g.x_valuation();
        g.divide_x_power(l);
        g
    }
}

/// Truncated product of two series (length `n`).
pub fn ser_mul(k: &NumberField, a: &[KElem], b: &[KElem], n: usize) -> Vec<KElem> {
    // products are summed unreduced and reduced once per coefficient
    let mut out = vec![UPoly::zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if is_zero(y) {
                continue;
            }
            out[i + j] = &out[i + j] + &(x.rep() * y.rep());
        }
    }
    out.into_iter().map(|c| clean(k, k.reduce(c))).collect()
}

/// Inverse of a series with nonzero constant term, to length `n`.
pub fn ser_inv(k: &NumberField, a: &[KElem], n: usize) -> Vec<KElem> {
    let a0inv = k.inv(&a[0]).expect("unit constant term");
    let mut b = vec![a0inv.clone()];
    for m in 1..n {
        let mut s = k.zero();
        for i in 1..=m.min(a.len() - 1) {
            s = k.add(&s, &k.mul(&a[i], &b[m - i]));
        }
        b.push(clean(k, k.neg(&k.mul(&s, &a0inv))));
    }
    b
}

fn row_series(row: &[KElem], n: usize, k: &NumberField) -> Vec<KElem> {
    let mut out: Vec<KElem> = row.iter().take(n).cloned().collect();
    out.resize(n, k.zero());
    out
}

/// `(G(x, Y), G_y(x, Y))` truncated to length `n`.
fn eval_with_derivative(k: &NumberField, g: &KBiv, y: &[KElem], n: usize) -> (Vec<KElem>, Vec<KElem>) {
    let mut val = vec![k.zero(); n];
    let mut der = vec![k.zero(); n];
    for j in (0..g.rows.len()).rev() {
        // der = der*Y + val ; val = val*Y + g_j
        let dy = ser_mul(k, &der, y, n);
        der = dy.iter().zip(&val).map(|(a, b)| k.add(a, b)).collect();
        let vy = ser_mul(k, &val, y, n);
        let gj = row_series(&g.rows[j], n, k);
        val = vy.iter().zip(&gj).map(|(a, b)| k.add(a, b)).collect();
    }
    (val.into_iter().map(|c| clean(k, c)).collect(), der.into_iter().map(|c| clean(k, c)).collect())
}

/// Extends `y`, a root of `G` with `y(0) = 0` known modulo `x^len`, to the
/// root modulo `x^n`. Requires `G_y(0, 0) != 0`.
pub fn newton_extend(k: &NumberField, g: &KBiv, y: &mut Vec<KElem>, n: usize) {
    if y.is_empty() {
        y.push(k.zero());
    }
    while y.len() < n {
        let target = (2 * y.len()).min(n);
        y.resize(target, k.zero());
        let (v, d) = eval_with_derivative(k, g, y, target);
        let corr = ser_mul(k, &v, &ser_inv(k, &d, target), target);
        for (yi, ci) in y.iter_mut().zip(&corr) {
            *yi = clean(k, k.sub(yi, ci));
        }
    }
}
