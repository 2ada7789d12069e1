//! Seeded multistart optimization of `P/Q` on shrinking spheres.
//!
//! Every start owns a ChaCha stream derived from `(seed, radius index, start
//! index)`, and results are reduced in start order, so the output does not
//! depend on thread scheduling.

use super::types::{Bound, LimitVerdict, NumericParams, Tier, Witness};
use super::RatLimitError;
use crate::polyalg::rat::rat_to_f64;
use crate::polyalg::{ExtReal, MPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// A polynomial compiled to floating point.
#[derive(Clone, Debug)]
pub struct FPoly {
    terms: Vec<(Vec<i32>, f64)>,
}

impl FPoly {
    pub fn new(p: &MPoly) -> FPoly {
        FPoly { terms: p.terms().map(|(m, c)| (m.exps().iter().map(|&e| e as i32).collect(), rat_to_f64(c))).collect() }
    }

    /// Value and the sum of absolute term values (the cancellation scale).
    pub fn eval_with_scale(&self, v: &[f64]) -> (f64, f64) {
        let mut s = 0.0;
        let mut a = 0.0;
        for (e, c) in &self.terms {
            let mut t = *c;
            for (x, k) in v.iter().zip(e) {
                if *k != 0 {
                    t *= x.powi(*k);
                }
            }
            s += t;
            a += t.abs();
        }
        (s, a)
    }

    pub fn eval(&self, v: &[f64]) -> f64 {
        self.eval_with_scale(v).0
    }
}

struct Quotient<'a> {
    p: &'a FPoly,
    q: &'a FPoly,
    r: f64,
    eps: f64,
}

impl Quotient<'_> {
    /// `P/Q` at `r*u`; `None` when `|Q|` is below the relative floor.
    fn at(&self, u: &[f64]) -> Option<f64> {
        let v: Vec<f64> = u.iter().map(|x| x * self.r).collect();
        let (qv, qa) = self.q.eval_with_scale(&v);
        if !(qv.abs() > self.eps * qa) || qv == 0.0 {
            return None;
        }
        let f = self.p.eval(&v) / qv;
        f.is_finite().then_some(f)
    }
}

fn normalize(u: &mut [f64]) {
    let n = u.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in u.iter_mut() {
        *x /= n;
    }
}

fn random_direction(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    loop {
        let u: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let norm2: f64 = u.iter().map(|x| x * x).sum();
        if norm2 > 1e-6 && norm2 <= 1.0 {
            let mut u = u;
            normalize(&mut u);
            return u;
        }
    }
}

/// Projected gradient ascent (`dir = 1`) or descent (`dir = -1`) on the unit sphere.
fn climb(f: &Quotient, start: &[f64], fstart: f64, dir: f64, max_iter: usize) -> (Vec<f64>, f64) {
    let n = start.len();
    let mut u = start.to_vec();
    let mut fu = fstart;
    let mut alpha = 0.25;
    let h = 1e-6;
    'outer: for _ in 0..max_iter {
        let mut g = vec![0.0; n];
        for j in 0..n {
            let mut a = u.clone();
            let mut b = u.clone();
            a[j] += h;
            b[j] -= h;
            match (f.at(&a), f.at(&b)) {
                (Some(fa), Some(fb)) => g[j] = (fa - fb) / (2.0 * h),
                _ => break 'outer,
            }
        }
        let radial: f64 = g.iter().zip(&u).map(|(a, b)| a * b).sum();
        for (gj, uj) in g.iter_mut().zip(&u) {
            *gj -= radial * uj;
        }
        let gn = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(gn > 1e-14) {
            break;
        }
        loop {
            let mut cand: Vec<f64> = u.iter().zip(&g).map(|(a, b)| a + dir * alpha * b / gn).collect();
            normalize(&mut cand);
            match f.at(&cand) {
                Some(fc) if dir * (fc - fu) > 0.0 => {
                    u = cand;
                    fu = fc;
                    alpha = (alpha * 2.0).min(1.0);
                    break;
                }
                _ => {
                    alpha *= 0.5;
                    if alpha < 1e-10 {
                        break 'outer;
                    }
                }
            }
        }
    }
    (u, fu)
}

/// Per-radius extrema of `P/Q` found by the multistart search.
#[derive(Clone, Debug)]
pub struct SphereScan {
    pub radii: Vec<f64>,
    pub mins: Vec<f64>,
    pub maxs: Vec<f64>,
    pub argmin: Vec<Vec<f64>>,
    pub argmax: Vec<Vec<f64>>,
    pub discarded: usize,
    pub total: usize,
}

struct StartResult {
    min: Option<(f64, Vec<f64>)>,
    max: Option<(f64, Vec<f64>)>,
    discarded: usize,
    total: usize,
}

pub fn sphere_scan(p: &MPoly, q: &MPoly, params: &NumericParams) -> Result<SphereScan, RatLimitError> {
    let n = q.nvars();
    let (fp, fq) = (FPoly::new(p), FPoly::new(q));
    let mut scan = SphereScan { radii: Vec::new(), mins: Vec::new(), maxs: Vec::new(), argmin: Vec::new(), argmax: Vec::new(), discarded: 0, total: 0 };
    for k in 0..params.radii {
        let r = params.radius(k);
        let f = Quotient { p: &fp, q: &fq, r, eps: params.eps };
        let results: Vec<StartResult> = (0..params.starts)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
                rng.set_stream(((k as u64) << 32) | i as u64);
                let (mut discarded, mut total) = (0, 0);
                for _ in 0..32 {
                    let u = random_direction(&mut rng, n);
                    total += 1;
                    match f.at(&u) {
                        Some(f0) => {
                            let lo = climb(&f, &u, f0, -1.0, params.max_iter);
                            let hi = climb(&f, &u, f0, 1.0, params.max_iter);
                            return StartResult { min: Some((lo.1, lo.0)), max: Some((hi.1, hi.0)), discarded, total };
                        }
                        None => discarded += 1,
                    }
                }
                StartResult { min: None, max: None, discarded, total }
            })
            .collect();
        let mut best_min: Option<(f64, Vec<f64>)> = None;
        let mut best_max: Option<(f64, Vec<f64>)> = None;
        for res in results {
            scan.discarded += res.discarded;
            scan.total += res.total;
            if let Some(m) = res.min {
                if best_min.as_ref().is_none_or(|b| m.0 < b.0) {
                    best_min = Some(m);
                }
            }
            if let Some(m) = res.max {
                if best_max.as_ref().is_none_or(|b| m.0 > b.0) {
                    best_max = Some(m);
                }
            }
        }
        if 2 * scan.discarded > scan.total {
            return Err(RatLimitError::DenominatorZeroHit { discarded: scan.discarded, total: scan.total });
        }
        let (Some(mn), Some(mx)) = (best_min, best_max) else {
            return Err(RatLimitError::DenominatorZeroHit { discarded: scan.discarded, total: scan.total });
        };
        scan.radii.push(r);
        scan.mins.push(mn.0);
        scan.argmin.push(mn.1);
        scan.maxs.push(mx.0);
        scan.argmax.push(mx.1);
    }
    Ok(scan)
}

/// Extrapolated value and error from the last four radii.
pub fn extrapolate(vals: &[f64], tau: f64) -> (ExtReal, f64) {
    let last = &vals[vals.len() - 4..];
    let growing = last.windows(2).all(|w| w[1].abs() * tau >= w[0].abs() && w[1].abs() > 0.0);
    if growing && last[3].abs() > 1.0 && last.iter().all(|v| v.signum() == last[3].signum()) {
        let v = if last[3] > 0.0 { ExtReal::PosInf } else { ExtReal::NegInf };
        return (v, 0.0);
    }
    let weights = [1.0, 2.0, 3.0, 4.0];
    let mean = last.iter().zip(&weights).map(|(v, w)| v * w).sum::<f64>() / 10.0;
    let dev = last.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
    let err = dev.max(1e-9 * (1.0 + mean.abs()));
    (ExtReal::approx(mean, err), err)
}

fn fmt_dir(u: &[f64]) -> String {
    let parts: Vec<String> = u.iter().map(|x| format!("{:.4}", x)).collect();
    format!("({})", parts.join(", "))
}

/// Numeric lower and upper limits of `P/Q` at the origin.
pub fn numeric_estimate(p: &MPoly, q: &MPoly, params: &NumericParams) -> Result<LimitVerdict, RatLimitError> {
    let scan = sphere_scan(p, q, params)?;
    let (lo, elo) = extrapolate(&scan.mins, params.tau);
    let (hi, ehi) = extrapolate(&scan.maxs, params.tau);
    let last = scan.radii.len() - 1;
    let witnesses = vec![
        Witness::new("direction", format!("min {:.6} at r = {:.3e} in direction {}", scan.mins[last], scan.radii[last], fmt_dir(&scan.argmin[last]))),
        Witness::new("direction", format!("max {:.6} at r = {:.3e} in direction {}", scan.maxs[last], scan.radii[last], fmt_dir(&scan.argmax[last]))),
    ];
    Ok(LimitVerdict { lower: Some(Bound::numeric(lo, elo)), upper: Some(Bound::numeric(hi, ehi)), tiers: vec![Tier::Numeric], witnesses })
}
