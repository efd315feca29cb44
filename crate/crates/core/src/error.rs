use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Which hypothesis of a cabling or base-case classification failed.
///
/// A refusal is an ordinary outcome: the classification results only cover
/// certain parameter ranges, and callers are told exactly which gate closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    /// The companion knot type is not known to be Legendrian simple.
    BaseNotSimple,
    /// The companion knot type is not known to satisfy the UTP.
    BaseNotUtp,
    /// The contact width of the companion is only known up to an interval.
    WidthNotExact,
    /// The cabling slope equals the contact width; neither cabling rule applies.
    SlopeEqualsWidth,
    /// Positive-cable rule applied to a slope that is not above the width.
    SlopeNotAboveWidth,
    /// Negative-cable rule applied to a slope that is not below the width.
    SlopeNotBelowWidth,
    /// Negative torus knot with -1 < p/q < 0; the row formula has no input row.
    NegativeTorusSlopeAboveMinusOne,
    /// Torus-knot base case called with parameters outside its range.
    TorusParameters,
    /// Connected sum with a summand that is not Legendrian simple.
    BranchedSummand,
}

impl Hypothesis {
    pub fn code(self) -> &'static str {
        match self {
            Hypothesis::BaseNotSimple => "base_not_simple",
            Hypothesis::BaseNotUtp => "base_not_utp",
            Hypothesis::WidthNotExact => "width_not_exact",
            Hypothesis::SlopeEqualsWidth => "slope_equals_width",
            Hypothesis::SlopeNotAboveWidth => "slope_not_above_width",
            Hypothesis::SlopeNotBelowWidth => "slope_not_below_width",
            Hypothesis::NegativeTorusSlopeAboveMinusOne => "negative_torus_slope_above_minus_one",
            Hypothesis::TorusParameters => "torus_parameters",
            Hypothesis::BranchedSummand => "branched_summand",
        }
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("(0,0) does not determine a slope")]
    ZeroVector,
    #[error("vector ({0},{1}) is not primitive")]
    NotPrimitive(String, String),
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(String),
    #[error("pair of vectors has determinant {0}, expected +1 or -1")]
    NotBasicSlice(String),
    #[error("slopes must differ")]
    EqualSlopes,
    #[error("denominator {0} must be positive")]
    NonPositiveDenominator(String),
    #[error("{0} is an integer")]
    IntegerRatio(String),
    #[error("slope term {0} is not finite")]
    InfiniteTerm(String),
    #[error("invalid cable parameters ({p},{q}): {reason}")]
    InvalidCable {
        p: i64,
        q: i64,
        reason: &'static str,
    },
    #[error("dividing slope equals the cable slope; use the Legendrian divide formula")]
    RulingIsDivide,
    #[error("index k = {0} must be nonnegative")]
    NegativeIndex(i64),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("not covered: {hypothesis} ({detail})")]
    NotCovered {
        hypothesis: Hypothesis,
        detail: String,
    },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("relation {0} changes (r, tb)")]
    InconsistentRelation(String),
    #[error("presentation is inconsistent: {0}")]
    InconsistentPresentation(String),
    #[error("stabilization depth {0} exceeds the limit of {1}")]
    DepthTooLarge(u32, u32),
    #[error("floor {floor} lies above the maximal Thurston-Bennequin number {tb_bar}")]
    FloorAboveMax { floor: i64, tb_bar: i64 },
    #[error("cannot parse slope {0:?}")]
    BadSlope(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn not_covered(hypothesis: Hypothesis, detail: impl Into<String>) -> Self {
        Error::NotCovered {
            hypothesis,
            detail: detail.into(),
        }
    }

    pub fn hypothesis(&self) -> Option<Hypothesis> {
        match self {
            Error::NotCovered { hypothesis, .. } => Some(*hypothesis),
            _ => None,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn checked<T>(v: Option<T>, what: &'static str) -> Result<T> {
    v.ok_or(Error::Overflow(what))
}
