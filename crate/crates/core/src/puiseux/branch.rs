//! Real Newton-Puiseux expansion.
//!
//! Branches are followed only through real roots of the characteristic
//! polynomials; non-real roots are counted, not expanded. With the positive
//! real determination `t = |x|^(1/e)` fixed at every stage, each leaf of the
//! recursion is exactly one root `y(x)` of `F`, so
//! `#branches + nonreal + away = deg_y F`, where `away` counts roots that do
//! not tend to 0.
//!
//! Once a root of the characteristic polynomial is simple the remaining
//! series is a power series in `t`, computed on demand by Newton iteration.

use super::kseries::{clean, is_zero, newton_extend, KBiv};
use super::PuiseuxError;
use crate::polyalg::numfield::{real_roots_over, KElem, KPoly, NumberField};
use crate::polyalg::{MPoly, Rat, Real};
use num_traits::Zero;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Side {
    Pos,
    Neg,
}

impl Side {
    pub fn sign(self) -> i64 {
        match self {
            Side::Pos => 1,
            Side::Neg => -1,
        }
    }
}

#[derive(Clone, Debug)]
enum Tail {
    /// The branch is the finite sum of its head terms.
    Exact,
    /// `y = head + t^shift * Y(t)` with `Y` the root of `g` vanishing at 0;
    /// `coeffs` holds `Y` modulo `t^coeffs.len()`.
    Series { g: KBiv, coeffs: Vec<KElem> },
}

/// A real branch: the parameter variable equals `sign(side) * t^e` and the
/// other variable is a series in `t > 0` with coefficients in `field`.
#[derive(Clone, Debug)]
pub struct PuiseuxBranch {
    field: NumberField,
    param: usize,
    side: Side,
    e: u32,
    head: Vec<(u32, KElem)>,
    shift: u32,
    tail: Tail,
    n_max: u32,
}

impl PuiseuxBranch {
    /// A branch given by finitely many rational terms `(t-exponent, coefficient)`.
    pub fn polynomial(param: usize, side: Side, e: u32, terms: &[(u32, Rat)]) -> PuiseuxBranch {
        let k = NumberField::rationals();
        let mut head: Vec<(u32, KElem)> = terms.iter().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (*j, k.from_rat(c.clone()))).collect();
        head.sort_by_key(|(j, _)| *j);
        PuiseuxBranch { field: k, param, side, e, head, shift: 0, tail: Tail::Exact, n_max: 0 }
    }

    /// The branch `other = 0` along the axis of `param`.
    pub fn axis(param: usize, side: Side) -> PuiseuxBranch {
        PuiseuxBranch::polynomial(param, side, 1, &[])
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    /// Index of the variable that tends to 0 as `sign * t^e`.
    pub fn param_var(&self) -> usize {
        self.param
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn ramification(&self) -> u32 {
        self.e
    }

    /// Every listed coefficient is real by construction.
    pub fn is_real(&self) -> bool {
        true
    }

    /// Exponent cap (in parameter units) for on-demand deepening.
    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn set_n_max(&mut self, n: u32) {
        self.n_max = n;
    }

    /// The same curve with the roles of the two variables exchanged in the
    /// labelling (used for expansions of the swapped polynomial).
    pub fn with_param(mut self, param: usize) -> PuiseuxBranch {
        self.param = param;
        self
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.tail, Tail::Exact)
    }

    /// Number of leading `t`-coefficients known exactly (`None`: all of them).
    pub fn known_t(&self) -> Option<usize> {
        match &self.tail {
            Tail::Exact => None,
            Tail::Series { coeffs, .. } => Some(self.shift as usize + coeffs.len()),
        }
    }

    /// Exponent bound in units of the parameter: all terms with exponent
    /// below the returned value are known.
    pub fn order(&self) -> Option<Rat> {
        self.known_t().map(|n| Rat::new((n as i64).into(), (self.e as i64).into()))
    }

    /// Makes the first `n_t` coefficients in `t` exact.
    pub fn deepen_t(&mut self, n_t: usize) {
        let shift = self.shift as usize;
        if let Tail::Series { g, coeffs } = &mut self.tail {
            if n_t > shift + coeffs.len() {
                newton_extend(&self.field, g, coeffs, n_t - shift);
            }
        }
    }

    /// Makes all terms of parameter-exponent below `n` exact.
    pub fn deepen_to(&mut self, n: u32) {
        self.deepen_t((n * self.e) as usize);
    }

    /// Dense coefficients in `t` for exponents below `n_t` (deepening as needed).
    pub fn dense_t(&mut self, n_t: usize) -> Vec<KElem> {
        self.deepen_t(n_t);
        let k = &self.field;
        let mut out = vec![k.zero(); n_t];
        for (j, c) in &self.head {
            if (*j as usize) < n_t {
                out[*j as usize] = k.add(&out[*j as usize], c);
            }
        }
        if let Tail::Series { coeffs, .. } = &self.tail {
            for (i, c) in coeffs.iter().enumerate() {
                let idx = self.shift as usize + i;
                if idx < n_t {
                    out[idx] = k.add(&out[idx], c);
                }
            }
        }
        out.into_iter().map(|c| clean(k, c)).collect()
    }

    /// Largest `t`-exponent of a head term, used for exact branches.
    pub fn head_degree(&self) -> usize {
        self.head.last().map(|(j, _)| *j as usize).unwrap_or(0)
    }

    /// Nonzero known terms as (parameter exponent, exact coefficient).
    pub fn terms(&self) -> Vec<(Rat, Real)> {
        let n = self.known_t().unwrap_or(self.head_degree() + 1);
        let mut me = self.clone();
        let dense = me.dense_t(n);
        dense
            .iter()
            .enumerate()
            .filter(|(_, c)| !is_zero(c))
            .map(|(j, c)| (Rat::new((j as i64).into(), (self.e as i64).into()), self.field.to_real(c)))
            .collect()
    }

    /// Coefficient of the term with parameter exponent `exp` (deepening as needed).
    pub fn coefficient(&mut self, exp: &Rat) -> Real {
        let t = exp * Rat::from_integer((self.e as i64).into());
        if !t.is_integer() || t < Rat::zero() {
            return Real::zero();
        }
        let j: usize = t.to_integer().try_into().expect("small exponent");
        let dense = self.dense_t(j + 1);
        self.field.to_real(&dense[j])
    }

    /// Value of the other variable at parameter value `x` (same sign as the
    /// side), using the known terms.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let t = x.abs().powf(1.0 / self.e as f64);
        let n = self.known_t().unwrap_or(self.head_degree() + 1);
        let mut me = self.clone();
        me.dense_t(n).iter().enumerate().rev().fold(0.0, |acc, (_, c)| acc * t + self.field.to_f64(c))
    }
}

/// All real branches of `F = 0` at the origin on one side.
#[derive(Clone, Debug)]
pub struct BranchSet {
    pub poly: MPoly,
    pub side: Side,
    pub branches: Vec<PuiseuxBranch>,
    /// Multiplicity of `x = 0` (vertical axis) as a component.
    pub x_axis_multiplicity: u32,
    /// Multiplicity of `y = 0` as a component (also listed among `branches`).
    pub y_axis_multiplicity: u32,
    /// Roots `y(x) -> 0` with a non-real coefficient.
    pub nonreal: u32,
    /// Roots `y(x)` that do not tend to 0.
    pub away: u32,
}

impl BranchSet {
    /// `#branches + nonreal + away`; equals `deg_y F` for squarefree `F`.
    pub fn accounted_degree(&self) -> u32 {
        self.branches.len() as u32 + self.nonreal + self.away
    }
}

struct Ctx {
    side: Side,
    cap: u32,
    want_t: Option<u32>,
    out: Vec<PuiseuxBranch>,
    nonreal: u32,
}

/// Expands all real branches `y(x)` of `F` for `x -> 0` on `side`, with terms
/// of exponent below `order` made exact. `n_max` bounds the exponents
/// explored before separation (default `64 * deg F`).
pub fn branch_expand(f: &MPoly, order: u32, side: Side, n_max: Option<u32>) -> Result<BranchSet, PuiseuxError> {
    if f.nvars() != 2 {
        return Err(PuiseuxError::NotBivariate);
    }
    if f.is_zero() {
        return Err(PuiseuxError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Err(PuiseuxError::NotVanishingAtOrigin);
    }
    let deg = f.total_degree().unwrap_or(1).max(1);
    let cap = n_max.unwrap_or(64 * deg);
    let fs = if side == Side::Neg { f.scale_var(0, &Rat::from_integer((-1).into())) } else { f.clone() };
    let k = NumberField::rationals();
    let mut g = KBiv::from_mpoly(&k, &fs);
    let a = g.x_valuation();
    g.divide_x_power(a);
    let r = g.min_i_zero_row();
    let away = g.deg_y() as u32 - r as u32;
    let y_mult = g.y_valuation() as u32;
    let mut ctx = Ctx { side, cap, want_t: Some(order), out: Vec::new(), nonreal: 0 };
    expand(&mut ctx, k, g, r, Vec::new(), 0, 1)?;
    Ok(BranchSet {
        poly: f.clone(),
        side,
        branches: ctx.out,
        x_axis_multiplicity: a as u32,
        y_axis_multiplicity: y_mult,
        nonreal: ctx.nonreal,
        away,
    })
}

/// Whether `F` has a real branch through the origin on `side` (no tails are
/// computed).
pub fn has_real_branch(f: &MPoly, side: Side, n_max: Option<u32>) -> Result<bool, PuiseuxError> {
    let deg = f.total_degree().unwrap_or(1).max(1);
    let fs = if side == Side::Neg { f.scale_var(0, &Rat::from_integer((-1).into())) } else { f.clone() };
    let k = NumberField::rationals();
    let mut g = KBiv::from_mpoly(&k, &fs);
    let a = g.x_valuation();
    g.divide_x_power(a);
    let r = g.min_i_zero_row();
    let mut ctx = Ctx { side, cap: n_max.unwrap_or(64 * deg), want_t: None, out: Vec::new(), nonreal: 0 };
    expand(&mut ctx, k, g, r, Vec::new(), 0, 1)?;
    Ok(!ctx.out.is_empty())
}

impl KBiv {
    /// Lowest `j` with a nonzero `x^0 y^j` coefficient.
    fn min_i_zero_row(&self) -> usize {
        (0..self.rows.len()).find(|&j| self.coeff(0, j).is_some()).unwrap_or(0)
    }
}

fn expand(ctx: &mut Ctx, k: NumberField, g: KBiv, r: usize, head: Vec<(u32, KElem)>, shift: u32, e: u32) -> Result<(), PuiseuxError> {
    if r == 0 {
        return Ok(());
    }
    let j0 = g.y_valuation();
    if j0 > 1 {
        return Err(PuiseuxError::NotSquarefree);
    }
    let leaf = |tail: Tail, k: &NumberField| PuiseuxBranch { field: k.clone(), param: 0, side: ctx.side, e, head: head.clone(), shift, tail, n_max: ctx.cap };
    if j0 == 1 {
        ctx.out.push(leaf(Tail::Exact, &k));
        if r == 1 {
            return Ok(());
        }
    } else if r == 1 {
        let mut b = leaf(Tail::Series { g, coeffs: vec![k.zero()] }, &k);
        if let Some(n) = ctx.want_t {
            b.deepen_to(n);
        }
        ctx.out.push(b);
        return Ok(());
    }
    // lower Newton polygon from (min_i(j0), j0) up to (0, r)
    let mut cur = (g.min_i(j0).expect("nonzero row"), j0);
    while cur.0 > 0 {
        let mut best: Option<(Rat, usize, usize)> = None;
        for j in cur.1 + 1..=r {
            let Some(i) = g.min_i(j) else { continue };
            let slope = Rat::new((cur.0 as i64 - i as i64).into(), ((j - cur.1) as i64).into());
            let better = match &best {
                None => true,
                Some((s, _, bj)) => slope > *s || (slope == *s && j > *bj),
            };
            if better {
                best = Some((slope, i, j));
            }
        }
        let (gamma, ni, nj) = best.expect("polygon reaches the y-axis");
        let (p, q) = (gamma.numer().clone(), gamma.denom().clone());
        let p: u32 = p.try_into().expect("small exponent");
        let q: u32 = q.try_into().expect("small exponent");
        let height = nj - cur.1;
        // characteristic polynomial in c over the edge points
        let mut phi: KPoly = vec![k.zero(); height + 1];
        for (dj, slot) in phi.iter_mut().enumerate() {
            let j = cur.1 + dj;
            let num = (cur.0 as i64 - ni as i64) * dj as i64;
            let den = (nj - cur.1) as i64;
            if num % den != 0 {
                continue;
            }
            let i = cur.0 as i64 - num / den;
            if i < 0 {
                continue;
            }
            if let Some(c) = g.coeff(i as usize, j) {
                *slot = c.clone();
            }
        }
        let roots = real_roots_over(&k, &phi)?;
        let real_mult: u32 = roots.iter().map(|r| r.multiplicity).sum();
        ctx.nonreal += height as u32 - real_mult;
        let new_shift = shift * q + p;
        let new_e = e * q;
        if !roots.is_empty() && new_shift > ctx.cap.saturating_mul(new_e) {
            return Err(PuiseuxError::DeepeningBudgetExceeded { n_max: ctx.cap });
        }
        for root in roots {
            let k2 = root.field;
            let g2 = g.embed(&k2, &root.embedding).substitute(&k2, q, p, &root.root);
            let mut head2: Vec<(u32, KElem)> = head.iter().map(|(j, c)| (j * q, root.embedding.apply(&k2, c))).collect();
            head2.push((new_shift, root.root.clone()));
            expand(ctx, k2, g2, root.multiplicity as usize, head2, new_shift, new_e)?;
        }
        cur = (ni, nj);
    }
    Ok(())
}
