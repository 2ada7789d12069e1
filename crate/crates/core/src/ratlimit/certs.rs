//! Exact certificates read off the monomials of a polynomial.

use crate::polyalg::{MPoly, Monomial, Rat, VarList};
use num_traits::{One, Signed};

/// `s_d = u_1^(2d) + ... + u_n^(2d)`.
pub fn build_power_sum(vars: &VarList, d: u32) -> MPoly {
    let n = vars.len();
    MPoly::from_terms(vars.clone(), (0..n).map(|i| (Monomial::var(n, i, 2 * d).exps().to_vec(), Rat::one())))
}

/// Sign `s` such that every monomial of `s*Q` has even exponents and a
/// positive coefficient, if one exists.
pub fn sign_certificate(q: &MPoly) -> Option<i8> {
    let mut sign: Option<i8> = None;
    for (m, c) in q.terms() {
        if !m.all_even() {
            return None;
        }
        let s = if c.is_positive() { 1 } else { -1 };
        if *sign.get_or_insert(s) != s {
            return None;
        }
    }
    sign
}

/// Sign `s` and exponents `a_i` such that `s*Q` passes the sign certificate
/// and contains the pure power `u_i^(2 a_i)` for every variable (the
/// smallest one when several are present).
pub fn monomial_certificate(q: &MPoly) -> Option<(i8, Vec<u32>)> {
    let sign = sign_certificate(q)?;
    let mut exps = vec![None; q.nvars()];
    for (m, _) in q.terms() {
        if let Some((i, e)) = m.pure_power() {
            let slot: &mut Option<u32> = &mut exps[i];
            if slot.is_none_or(|old| e / 2 < old) {
                *slot = Some(e / 2);
            }
        }
    }
    let exps: Option<Vec<u32>> = exps.into_iter().collect();
    Some((sign, exps?))
}

/// Lowest-index variable whose axis lies in the zero set of `Q`.
pub fn axis_vanishing(q: &MPoly) -> Option<usize> {
    (0..q.nvars()).find(|&i| q.restrict_to_axis(i).is_zero())
}
