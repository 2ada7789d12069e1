//! Resultants: Sylvester determinants evaluated by fraction-free (Bareiss)
//! elimination over the polynomial ring, plus a Euclidean version for
//! univariate polynomials over the rationals.

use super::mpoly::MPoly;
use super::rat::Rat;
use super::upoly::UPoly;
use super::PolyError;
use num_traits::{One, Zero};

/// Sylvester matrix of `f`, `g` with respect to variable `var`; entries are
/// polynomials free of `var`.
pub fn sylvester_matrix(f: &MPoly, g: &MPoly, var: usize) -> Result<Vec<Vec<MPoly>>, PolyError> {
    if !f.same_vars(g) {
        return Err(PolyError::VariableMismatch { left: f.vars().to_vec(), right: g.vars().to_vec() });
    }
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    if f.is_zero() || g.is_zero() || m == 0 || n == 0 {
        return Err(PolyError::DegreeZero);
    }
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let size = m + n;
    let zero = MPoly::zero(f.vars().clone());
    let mut mat = vec![vec![zero; size]; size];
    for r in 0..n {
        for (k, c) in fc.iter().enumerate() {
            // highest coefficient first
            mat[r][r + m - k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in gc.iter().enumerate() {
            mat[n + r][r + n - k] = c.clone();
        }
    }
    Ok(mat)
}

/// Determinant of a square polynomial matrix by Bareiss elimination.
pub fn bareiss_det(mut mat: Vec<Vec<MPoly>>) -> Result<MPoly, PolyError> {
    let size = mat.len();
    assert!(size > 0);
    let vars = mat[0][0].vars().clone();
    let mut negate = false;
    let mut prev = MPoly::one(vars.clone());
    for k in 0..size {
        if mat[k][k].is_zero() {
            let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                return Ok(MPoly::zero(vars));
            };
            mat.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&mat[i][j] * &mat[k][k]) - &(&mat[i][k] * &mat[k][j]);
                mat[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = mat[k][k].clone();
    }
    let det = mat[size - 1][size - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `Res_var(f, g)`: the Sylvester determinant with respect to `var`.
pub fn resultant(f: &MPoly, g: &MPoly, var: usize) -> Result<MPoly, PolyError> {
    bareiss_det(sylvester_matrix(f, g, var)?)
}

/// Resultant of two univariate polynomials over the rationals (Euclidean).
/// By convention the result is zero if either input is zero and `lc^deg` when
/// one of them is a nonzero constant.
pub fn resultant_upoly(a: &UPoly, b: &UPoly) -> Rat {
    if a.is_zero() || b.is_zero() {
        return Rat::zero();
    }
    let (da, db) = (a.deg(), b.deg());
    if db == 0 {
        return num_traits::pow(b.lc(), da as usize);
    }
    if da == 0 {
        return num_traits::pow(a.lc(), db as usize);
    }
    let r = a.rem(b);
    if r.is_zero() {
        return Rat::zero();
    }
    let sign = if (da * db) % 2 == 1 { -Rat::one() } else { Rat::one() };
    sign * num_traits::pow(b.lc(), (da - r.deg()) as usize) * resultant_upoly(b, &r)
}
