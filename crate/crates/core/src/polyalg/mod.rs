//! Exact arithmetic foundation: rationals, sparse multivariate polynomials,
//! univariate tools (resultants, real-root isolation), real algebraic numbers,
//! number fields and extended reals.
//!
//! Every value here is immutable once built and every operation is a pure
//! function.

pub mod algnum;
pub mod bivar;
pub mod extreal;
pub mod mpoly;
pub mod numfield;
pub mod quadratic;
pub mod rat;
pub mod resultant;
pub mod roots;
pub mod upoly;

pub use algnum::{AlgNum, Real};
pub use extreal::{ExtReal, Finite};
pub use mpoly::{var_list, MPoly, Monomial, VarList};
pub use quadratic::{quadratic_definiteness, Definiteness, QuadraticClass};
pub use rat::Rat;
pub use resultant::resultant;
pub use roots::{isolate_real_roots, RootInterval};
pub use upoly::UPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },
    #[error("the zero polynomial has no lowest form")]
    NoLowestForm,
    #[error("resultant needs both polynomials of positive degree in the eliminated variable")]
    DegreeZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("expected a homogeneous polynomial of degree 2")]
    NotQuadraticForm,
    #[error("expected a univariate polynomial")]
    NotUnivariate,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("no primitive element found among the tried multipliers")]
    PrimitiveElement,
}
