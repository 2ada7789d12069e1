//! Sign classification of quadratic forms by symmetric Gaussian elimination
//! over the rationals.

use super::mpoly::MPoly;
use super::rat::{rat, Rat};
use super::PolyError;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Definiteness {
    PosDef,
    NegDef,
    PosSemiDef,
    NegSemiDef,
    Indefinite,
}

impl Definiteness {
    pub fn is_definite(self) -> bool {
        matches!(self, Definiteness::PosDef | Definiteness::NegDef)
    }
}

/// Classification result. The zero form is reported as `PosSemiDef` with
/// `is_zero` set.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuadraticClass {
    pub class: Definiteness,
    pub is_zero: bool,
}

/// Symmetric matrix of a quadratic form over the ambient variables.
pub fn symmetric_matrix(q: &MPoly) -> Result<Vec<Vec<Rat>>, PolyError> {
    let n = q.nvars();
    let mut a = vec![vec![Rat::zero(); n]; n];
    for (m, c) in q.terms() {
        if m.degree() != 2 {
            return Err(PolyError::NotQuadraticForm);
        }
        let idx: Vec<usize> = m.exps().iter().enumerate().flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize)).collect();
        let (i, j) = (idx[0], idx[1]);
        if i == j {
            a[i][i] = c.clone();
        } else {
            let half = c / rat(2);
            a[i][j] = half.clone();
            a[j][i] = half;
        }
    }
    Ok(a)
}

pub fn quadratic_definiteness(q: &MPoly) -> Result<QuadraticClass, PolyError> {
    let mut a = symmetric_matrix(q)?;
    let n = a.len();
    let mut remaining: Vec<usize> = (0..n).collect();
    let (mut pos, mut neg) = (0usize, 0usize);
    loop {
        let Some(k) = remaining.iter().position(|&i| !a[i][i].is_zero()) else {
            // zero diagonal: any nonzero off-diagonal entry gives a 2x2 minor
            // [[0, b], [b, 0]] of negative determinant
            let off = remaining.iter().any(|&i| remaining.iter().any(|&j| i != j && !a[i][j].is_zero()));
            if off {
                return Ok(QuadraticClass { class: Definiteness::Indefinite, is_zero: false });
            }
            break;
        };
        let p = remaining.remove(k);
        let pivot = a[p][p].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for &i in &remaining {
            for &j in &remaining {
                let delta = &a[i][p] * &a[p][j] / &pivot;
                a[i][j] -= delta;
            }
        }
    }
    let rank = pos + neg;
    let class = match (pos, neg) {
        (p, nn) if p > 0 && nn > 0 => Definiteness::Indefinite,
        (_, 0) if rank == n && n > 0 => Definiteness::PosDef,
        (_, 0) => Definiteness::PosSemiDef,
        (0, _) if rank == n => Definiteness::NegDef,
        _ => Definiteness::NegSemiDef,
    };
    Ok(QuadraticClass { class, is_zero: q.is_zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::mpoly::var_list;
    use crate::polyalg::rat::ratio;

    fn form(vars: &[&str], terms: &[(&[u32], Rat)]) -> MPoly {
        MPoly::from_terms(var_list(vars), terms.iter().map(|(e, c)| (e.to_vec(), c.clone())))
    }

    #[test]
    fn classic_cases() {
        let q = form(&["x", "y"], &[(&[2, 0], rat(1)), (&[0, 2], rat(1))]);
        assert_eq!(quadratic_definiteness(&q).unwrap().class, Definiteness::PosDef);
        let q = form(&["x", "y"], &[(&[2, 0], rat(1)), (&[0, 2], rat(-1))]);
        assert_eq!(quadratic_definiteness(&q).unwrap().class, Definiteness::Indefinite);
        let q = form(&["x", "y"], &[(&[1, 1], rat(1))]);
        assert_eq!(quadratic_definiteness(&q).unwrap().class, Definiteness::Indefinite);
        let q = form(&["x", "y"], &[(&[2, 0], rat(1)), (&[1, 1], rat(-2)), (&[0, 2], rat(1))]);
        assert_eq!(quadratic_definiteness(&q).unwrap().class, Definiteness::PosSemiDef);
    }

    #[test]
    fn missing_variable_makes_it_semidefinite() {
        let q = form(&["x", "y", "z"], &[(&[2, 0, 0], ratio(-1, 4)), (&[0, 2, 0], ratio(-1, 2))]);
        assert_eq!(quadratic_definiteness(&q).unwrap(), QuadraticClass { class: Definiteness::NegSemiDef, is_zero: false });
    }

    #[test]
    fn zero_form_flagged() {
        let q = MPoly::zero(var_list(&["x", "y"]));
        assert_eq!(quadratic_definiteness(&q).unwrap(), QuadraticClass { class: Definiteness::PosSemiDef, is_zero: true });
    }

    #[test]
    fn non_quadratic_rejected() {
        let q = form(&["x", "y"], &[(&[2, 0], rat(1)), (&[1, 0], rat(1))]);
        assert!(matches!(quadratic_definiteness(&q), Err(PolyError::NotQuadraticForm)));
    }
}
