//! Limits of rational functions `P/Q` at the origin.
//!
//! The zero-limit test decides whether `s_d / Q -> 0` for the power sum
//! `s_d = sum u_i^(2d)`; `liminf_limsup` computes the lower and upper limits.
//! Both run tiers in a fixed order: exact certificates, a complete exact
//! analysis in two variables (critical curve plus Puiseux branches), and a
//! seeded numeric estimator for three or more variables. Every bound carries
//! its certainty.

pub mod certs;
pub mod engine;
pub mod numeric;
pub mod types;

pub use certs::{axis_vanishing, build_power_sum, monomial_certificate, sign_certificate};
pub use engine::{axis_probes, critical_curve, liminf_limsup, univariate_limit, zero_limit_test, CriticalCurve};
pub use numeric::{numeric_estimate, sphere_scan, SphereScan};
pub use types::*;

use crate::puiseux::PuiseuxError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RatLimitError {
    #[error("the denominator has a real zero curve through the origin")]
    NonIsolatedDenominator,
    #[error("the critical curve vanishes identically")]
    WIdenticallyZero,
    #[error("the denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("numeric samples hit the denominator's zero set too often ({discarded} of {total} discarded)")]
    DenominatorZeroHit { discarded: usize, total: usize },
    #[error(transparent)]
    Puiseux(#[from] PuiseuxError),
}

impl From<crate::polyalg::PolyError> for RatLimitError {
    fn from(e: crate::polyalg::PolyError) -> Self {
        RatLimitError::Puiseux(PuiseuxError::Poly(e))
    }
}
