use super::branch::{has_real_branch, Side};
use super::PuiseuxError;
use crate::polyalg::bivar::{divisible_by_var, squarefree_part};
use crate::polyalg::MPoly;
use num_traits::Zero;

/// Whether the origin is an isolated point of the real zero set of `F`.
///
/// Decided on the squarefree part: an axis factor, or a real branch on
/// either side in the original or the swapped expansion, means not isolated.
pub fn isolated_zero_2d(f: &MPoly) -> Result<bool, PuiseuxError> {
    if f.nvars() != 2 {
        return Err(PuiseuxError::NotBivariate);
    }
    if f.is_zero() {
        return Err(PuiseuxError::ZeroPolynomial);
    }
    if !f.constant_term().is_zero() {
        return Ok(true);
    }
    let s = squarefree_part(f);
    if divisible_by_var(&s, 0) || divisible_by_var(&s, 1) {
        return Ok(false);
    }
    let swapped = s.permute(&[1, 0], s.vars().clone());
    for g in [&s, &swapped] {
        for side in [Side::Pos, Side::Neg] {
            if has_real_branch(g, side, None)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}


