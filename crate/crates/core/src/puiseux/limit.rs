use super::branch::PuiseuxBranch;
use super::kseries::{clean, is_zero, ser_mul};
use super::PuiseuxError;
use crate::polyalg::numfield::KElem;
use crate::polyalg::{ExtReal, MPoly};
use crate::polyalg::Rat;
use num_traits::Zero;
use std::cmp::Ordering;

/// `P` along the branch as a series in `t`, coefficients for exponents below `n_t`.
pub fn compose_along(p: &MPoly, b: &mut PuiseuxBranch, n_t: usize) -> Vec<KElem> {
    assert_eq!(p.nvars(), 2);
    let y = b.dense_t(n_t);
    let k = b.field().clone();
    let (param, other) = (b.param_var(), 1 - b.param_var());
    let e = b.ramification() as usize;
    let sign = b.side().sign();
    let maxj = p.degree_in(other) as usize;
    let mut ypow = vec![{
        let mut one = vec![k.zero(); n_t];
        if n_t > 0 {
            one[0] = k.one();
        }
        one
    }];
    for _ in 0..maxj {
        let next = ser_mul(&k, ypow.last().unwrap(), &y, n_t);
        ypow.push(next);
    }
    let mut out = vec![k.zero(); n_t];
    for (m, c) in p.terms() {
        let (i, j) = (m.exps()[param] as usize, m.exps()[other] as usize);
        let off = e * i;
        if off >= n_t {
            continue;
        }
        let mut c = c.clone();
        if sign < 0 && i % 2 == 1 {
            c = -c;
        }
        let ce = k.from_rat(c);
        for (idx, v) in ypow[j].iter().enumerate().take(n_t - off) {
            if !is_zero(v) {
                out[idx + off] = k.add(&out[idx + off], &k.mul(&ce, v));
            }
        }
    }
    out.into_iter().map(|c| clean(&k, c)).collect()
}

/// Exact `t`-length that captures every term of `P` along an exact branch.
fn exact_length(p: &MPoly, b: &PuiseuxBranch) -> usize {
    let (param, other) = (b.param_var(), 1 - b.param_var());
    let e = b.ramification() as usize;
    let hd = b.head_degree();
    p.terms().map(|(m, _)| e * m.exps()[param] as usize + hd * m.exps()[other] as usize).max().unwrap_or(0) + 1
}

fn first_nonzero(s: &[KElem]) -> Option<usize> {
    s.iter().position(|c| !is_zero(c))
}

/// Limit of `P/Q` as the parameter tends to 0 along the branch.
pub fn limit_along_branch(p: &MPoly, q: &MPoly, branch: &PuiseuxBranch) -> Result<ExtReal, PuiseuxError> {
    let mut b = branch.clone();
    let e = b.ramification() as usize;
    let (ord_q, qs) = if b.is_exact() {
        let n = exact_length(q, &b).max(exact_length(p, &b));
        let qs = compose_along(q, &mut b, n);
        match first_nonzero(&qs) {
            Some(o) => (o, qs),
            None => return Err(PuiseuxError::DenominatorVanishesOnBranch),
        }
    } else {
        let deg = q.total_degree().unwrap_or(0).max(1) as usize;
        let cap = b.n_max().max(1) as usize * e;
        let mut n = b.known_t().unwrap_or(0).max(2 * deg * e).max(4);
        loop {
            let qs = compose_along(q, &mut b, n);
            if let Some(o) = first_nonzero(&qs) {
                break (o, qs);
            }
            if n >= cap {
                return Err(PuiseuxError::DeepeningBudgetExceeded { n_max: b.n_max() });
            }
            n = (2 * n).min(cap);
        }
    };
    let ps = compose_along(p, &mut b, ord_q + 1);
    let k = b.field().clone();
    Ok(match first_nonzero(&ps) {
        None => ExtReal::rat(Rat::zero()),
        Some(o) if o > ord_q => ExtReal::rat(Rat::zero()),
        Some(o) => {
            let ratio = k.div(&ps[o], &qs[ord_q]).expect("nonzero leading coefficient");
            if o == ord_q {
                ExtReal::exact(k.to_real(&ratio))
            } else {
                ExtReal::infinity(if k.sign(&ratio) == Ordering::Less { Ordering::Less } else { Ordering::Greater })
            }
        }
    })
}
