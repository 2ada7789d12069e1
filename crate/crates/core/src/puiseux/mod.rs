//! Newton-Puiseux expansion of plane curves at the origin: real branches,
//! the isolated-real-zero test, and exact limits of rational functions along
//! branches.
//!
//! Branch coefficients live in real number fields `Q(theta)`; nested
//! extensions are flattened through primitive elements, so every zero test
//! is a single exact computation.

pub mod branch;
pub mod isolated;
pub mod kseries;
pub mod limit;

pub use branch::{branch_expand, BranchSet, PuiseuxBranch, Side};
pub use isolated::isolated_zero_2d;
pub use limit::{compose_along, limit_along_branch};

use crate::polyalg::PolyError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PuiseuxError {
    #[error("the zero polynomial has no branches")]
    ZeroPolynomial,
    #[error("the polynomial does not vanish at the origin")]
    NotVanishingAtOrigin,
    #[error("expected a polynomial in exactly two variables")]
    NotBivariate,
    #[error("repeated factor: the polynomial must be squarefree")]
    NotSquarefree,
    #[error("branch certification needs exponents beyond {n_max}")]
    DeepeningBudgetExceeded { n_max: u32 },
    #[error("the denominator vanishes identically along the branch")]
    DenominatorVanishesOnBranch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
