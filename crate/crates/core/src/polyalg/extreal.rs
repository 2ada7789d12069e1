//! Extended reals: `-inf`, finite values (exact or numeric), `+inf`.

use super::algnum::Real;
use super::rat::Rat;
use std::cmp::Ordering;
use std::fmt;

/// A finite value: exact, or a floating-point estimate with an absolute error
/// bound.
#[derive(Clone, Debug)]
pub enum Finite {
    Exact(Real),
    Approx { value: f64, error: f64 },
}

#[derive(Clone, Debug)]
pub enum ExtReal {
    NegInf,
    Finite(Finite),
    PosInf,
}

impl ExtReal {
    pub fn exact(r: Real) -> Self {
        ExtReal::Finite(Finite::Exact(r))
    }

    pub fn rat(r: Rat) -> Self {
        ExtReal::exact(Real::Rat(r))
    }

    pub fn approx(value: f64, error: f64) -> Self {
        ExtReal::Finite(Finite::Approx { value, error })
    }

    pub fn infinity(sign: Ordering) -> Self {
        if sign == Ordering::Less {
            ExtReal::NegInf
        } else {
            ExtReal::PosInf
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_approx(&self) -> bool {
        matches!(self, ExtReal::Finite(Finite::Approx { .. }))
    }

    pub fn as_real(&self) -> Option<&Real> {
        match self {
            ExtReal::Finite(Finite::Exact(r)) => Some(r),
            _ => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::PosInf => f64::INFINITY,
            ExtReal::Finite(Finite::Exact(r)) => r.to_f64(),
            ExtReal::Finite(Finite::Approx { value, .. }) => *value,
        }
    }

    /// Absolute error attached to the value (zero for exact values and infinities).
    pub fn error(&self) -> f64 {
        match self {
            ExtReal::Finite(Finite::Approx { error, .. }) => *error,
            _ => 0.0,
        }
    }

    pub fn neg(&self) -> ExtReal {
        match self {
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::PosInf => ExtReal::NegInf,
            ExtReal::Finite(Finite::Exact(r)) => ExtReal::exact(r.neg()),
            ExtReal::Finite(Finite::Approx { value, error }) => ExtReal::approx(-value, *error),
        }
    }

    /// Multiplication by a positive rational.
    pub fn scale_pos(&self, c: &Rat) -> ExtReal {
        match self {
            ExtReal::Finite(Finite::Exact(r)) => ExtReal::exact(r.mul(&Real::Rat(c.clone()))),
            ExtReal::Finite(Finite::Approx { value, error }) => {
                let f = super::rat::rat_to_f64(c);
                ExtReal::approx(value * f, error * f)
            }
            inf => inf.clone(),
        }
    }

    fn rank(&self) -> i8 {
        match self {
            ExtReal::NegInf => -1,
            ExtReal::Finite(_) => 0,
            ExtReal::PosInf => 1,
        }
    }

    /// Ordering; `None` when a numeric value overlaps the other operand.
    pub fn cmp_ext(&self, other: &ExtReal) -> Option<Ordering> {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => match (a, b) {
                (Finite::Exact(x), Finite::Exact(y)) => Some(x.cmp_exact(y)),
                _ => {
                    let (a_lo, a_hi) = finite_bounds(a);
                    let (b_lo, b_hi) = finite_bounds(b);
                    if a_hi < b_lo {
                        Some(Ordering::Less)
                    } else if b_hi < a_lo {
                        Some(Ordering::Greater)
                    } else {
                        None
                    }
                }
            },
            _ => Some(self.rank().cmp(&other.rank())),
        }
    }

    /// Exact equality of two exact values or equal infinities.
    pub fn exactly_equals(&self, other: &ExtReal) -> bool {
        match (self, other) {
            (ExtReal::NegInf, ExtReal::NegInf) | (ExtReal::PosInf, ExtReal::PosInf) => true,
            (ExtReal::Finite(Finite::Exact(a)), ExtReal::Finite(Finite::Exact(b))) => a == b,
            _ => false,
        }
    }
}

fn finite_bounds(f: &Finite) -> (f64, f64) {
    match f {
        Finite::Exact(r) => {
            let v = r.to_f64();
            let slack = v.abs() * 1e-15;
            (v - slack, v + slack)
        }
        Finite::Approx { value, error } => (value - error, value + error),
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => write!(f, "-inf"),
            ExtReal::PosInf => write!(f, "inf"),
            ExtReal::Finite(Finite::Exact(r)) => write!(f, "{}", r),
            ExtReal::Finite(Finite::Approx { value, error }) => write!(f, "{} +/- {:.1e}", value, error),
        }
    }
}
