//! Analytic expressions: AST, parser, exact total-degree Taylor truncation at
//! the origin, and floating-point evaluation.
//!
//! Function nodes are expanded at a fixed rational center (1 for `log` and
//! `sqrt`, 0 for the rest), so every Taylor coefficient is rational.

pub mod eval;
pub mod expr;
pub mod parse;
pub mod taylor;

pub use eval::{eval_numeric, DomainError};
pub use expr::{Expr, FunKind};
pub use parse::{parse_expr, ParseError};
pub use taylor::{as_polynomial, parse_polynomial, taylor, value_at_origin};

use crate::polyalg::rat::fmt_rat;
use crate::polyalg::Rat;
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("argument of {node} has constant term {} but the expansion center is {}", fmt_rat(.found), fmt_rat(.expected))]
    CenterViolation { node: String, found: Rat, expected: Rat },
    #[error("denominator of {node} vanishes at the origin")]
    DivisionBySeriesWithZeroConstant { node: String },
    #[error(transparent)]
    Domain(#[from] DomainError),
}
