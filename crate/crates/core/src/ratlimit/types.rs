use crate::polyalg::ExtReal;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Certainty {
    Exact,
    /// Estimate with an absolute error bound.
    Numeric { error: f64 },
}

impl Certainty {
    pub fn is_exact(self) -> bool {
        matches!(self, Certainty::Exact)
    }

    pub fn label(self) -> &'static str {
        match self {
            Certainty::Exact => "exact",
            Certainty::Numeric { .. } => "numeric",
        }
    }

    pub fn error(self) -> f64 {
        match self {
            Certainty::Exact => 0.0,
            Certainty::Numeric { error } => error,
        }
    }
}

/// One bound of a verdict.
#[derive(Clone, Debug)]
pub struct Bound {
    pub value: ExtReal,
    pub certainty: Certainty,
}

impl Bound {
    pub fn exact(value: ExtReal) -> Bound {
        Bound { value, certainty: Certainty::Exact }
    }

    pub fn numeric(value: ExtReal, error: f64) -> Bound {
        Bound { value, certainty: Certainty::Numeric { error } }
    }
}

/// Strategy identifiers recorded in tier traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tier {
    AxisVanishing,
    MonomialCertificate,
    QuadraticForm,
    Univariate,
    Bivariate,
    ConstantRatio,
    SignCertificate,
    AxisProbe,
    Numeric,
}

impl Tier {
    pub fn name(self) -> &'static str {
        match self {
            Tier::AxisVanishing => "axis_vanishing",
            Tier::MonomialCertificate => "monomial_certificate",
            Tier::QuadraticForm => "quadratic_form",
            Tier::Univariate => "univariate",
            Tier::Bivariate => "bivariate",
            Tier::ConstantRatio => "constant_ratio",
            Tier::SignCertificate => "sign_certificate",
            Tier::AxisProbe => "axis_probe",
            Tier::Numeric => "numeric",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence attached to a verdict: what it is and a human-readable rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub kind: String,
    pub detail: String,
}

impl Witness {
    pub fn new(kind: &str, detail: impl Into<String>) -> Witness {
        Witness { kind: kind.to_string(), detail: detail.into() }
    }
}

/// Lower and upper limit of `P/Q` at the origin. A bound is `None` when no
/// permitted tier could produce it.
#[derive(Clone, Debug)]
pub struct LimitVerdict {
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
    pub tiers: Vec<Tier>,
    pub witnesses: Vec<Witness>,
}

impl LimitVerdict {
    pub fn both_exact(lower: ExtReal, upper: ExtReal, tier: Tier) -> LimitVerdict {
        LimitVerdict { lower: Some(Bound::exact(lower)), upper: Some(Bound::exact(upper)), tiers: vec![tier], witnesses: Vec::new() }
    }

    pub fn is_exact(&self) -> bool {
        self.lower.as_ref().is_some_and(|b| b.certainty.is_exact()) && self.upper.as_ref().is_some_and(|b| b.certainty.is_exact())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroOutcome {
    IsZero,
    NotZero,
    Unknown,
}

/// Payload backing a zero-limit decision.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    None,
    /// `|Q| >= c * sum u_i^(2 a_i)` with the listed `a_i`.
    Monomial { sign: i8, exps: Vec<u32> },
    /// `Q` vanishes on the axis of this variable.
    Axis { var: usize },
    /// Definiteness class of a quadratic lowest form.
    Quadratic { class: String },
    /// Exact bivariate bounds of `s_d / Q`.
    Bivariate { lower: String, upper: String },
    /// `Q` has a real zero curve through the origin.
    NonIsolated,
    /// Per-radius maxima of `|s_d / Q|`.
    Trend { radii: Vec<f64>, maxima: Vec<f64> },
    /// Valuations of `s_d` and `Q` in one variable.
    Valuation { num: u32, den: u32 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTestResult {
    pub outcome: ZeroOutcome,
    pub certainty: Certainty,
    pub certificate: Certificate,
    pub tier: Option<Tier>,
}

impl ZeroTestResult {
    pub fn exact(outcome: ZeroOutcome, certificate: Certificate, tier: Tier) -> Self {
        ZeroTestResult { outcome, certainty: Certainty::Exact, certificate, tier: Some(tier) }
    }
}

/// Which tiers may run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EngineMode {
    /// Exact tiers first; numeric only where exact tiers are incomplete
    /// (three or more variables).
    #[default]
    Auto,
    /// Never run the numeric tier.
    ExactOnly,
    /// Also fall back to the numeric tier when an exact tier gives up.
    NumericAllowed,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericParams {
    pub r0: f64,
    pub gamma: f64,
    pub radii: usize,
    pub starts: usize,
    pub max_iter: usize,
    pub seed: u64,
    pub tau: f64,
    pub eps: f64,
}

impl Default for NumericParams {
    fn default() -> Self {
        NumericParams { r0: 0.1, gamma: 0.5, radii: 13, starts: 64, max_iter: 200, seed: 0, tau: 0.7, eps: 1e-9 }
    }
}

impl NumericParams {
    pub fn radius(&self, k: usize) -> f64 {
        self.r0 * self.gamma.powi(k as i32)
    }

    pub fn validate(&self) -> Result<(), String> {
        if !(self.gamma > 0.0 && self.gamma < 1.0) {
            return Err("radius ratio must lie in (0, 1)".into());
        }
        if self.starts == 0 {
            return Err("at least one multistart is required".into());
        }
        if self.radii < 4 {
            return Err("at least four radii are required".into());
        }
        if !(self.tau > 0.0 && self.tau < 1.0) {
            return Err("trend ratio must lie in (0, 1)".into());
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct EngineConfig {
    pub mode: EngineMode,
    pub numeric: NumericParams,
    /// Cap on Puiseux deepening; `None` uses the per-branch default.
    pub n_max: Option<u32>,
}
