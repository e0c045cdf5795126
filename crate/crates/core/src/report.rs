//! Structured outcome of evaluating one inequality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::conditions::ConditionReport;
use crate::tolerance::{scale_of, Tolerance};

/// Every inequality the crate evaluates. Serialized names double as the
/// selector strings accepted by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    ThmPremultiplicative,
    CorPairMultiplicative,
    ThmAdditive,
    CorPairAdditive,
    ThmKmAbstract,
    ThmKmAbstractRe,
    KmQuadraticForm,
    KmQuadraticFormRe,
    CorKmPair,
    KmBand,
    PropSgnChain,
    KmBandRe,
    PropIntegralBall,
    PropIntegralPair,
    CorIntegralBand,
    RealNonnegKm,
    DiscreteKm,
    ShishaMond,
}

impl TheoremId {
    pub const ALL: [TheoremId; 18] = [
        TheoremId::ThmPremultiplicative,
        TheoremId::CorPairMultiplicative,
        TheoremId::ThmAdditive,
        TheoremId::CorPairAdditive,
        TheoremId::ThmKmAbstract,
        TheoremId::ThmKmAbstractRe,
        TheoremId::KmQuadraticForm,
        TheoremId::KmQuadraticFormRe,
        TheoremId::CorKmPair,
        TheoremId::KmBand,
        TheoremId::PropSgnChain,
        TheoremId::KmBandRe,
        TheoremId::PropIntegralBall,
        TheoremId::PropIntegralPair,
        TheoremId::CorIntegralBand,
        TheoremId::RealNonnegKm,
        TheoremId::DiscreteKm,
        TheoremId::ShishaMond,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremId::ThmPremultiplicative => "thm_premultiplicative",
            TheoremId::CorPairMultiplicative => "cor_pair_multiplicative",
            TheoremId::ThmAdditive => "thm_additive",
            TheoremId::CorPairAdditive => "cor_pair_additive",
            TheoremId::ThmKmAbstract => "thm_km_abstract",
            TheoremId::ThmKmAbstractRe => "thm_km_abstract_re",
            TheoremId::KmQuadraticForm => "km_quadratic_form",
            TheoremId::KmQuadraticFormRe => "km_quadratic_form_re",
            TheoremId::CorKmPair => "cor_km_pair",
            TheoremId::KmBand => "km_band",
            TheoremId::PropSgnChain => "prop_sgn_chain",
            TheoremId::KmBandRe => "km_band_re",
            TheoremId::PropIntegralBall => "prop_integral_ball",
            TheoremId::PropIntegralPair => "prop_integral_pair",
            TheoremId::CorIntegralBand => "cor_integral_band",
            TheoremId::RealNonnegKm => "real_nonneg_km",
            TheoremId::DiscreteKm => "discrete_km",
            TheoremId::ShishaMond => "shisha_mond",
        }
    }

    pub fn from_name(name: &str) -> Option<TheoremId> {
        TheoremId::ALL.into_iter().find(|t| t.name() == name)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why an evaluator declined to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureReason {
    BallCondition,
    StrictDominance,
    PairCondition,
    BandCondition,
    NonPositiveRealProduct,
    DegenerateSum,
    NonPositiveBandFloor,
    VanishingInnerProduct,
    VanishingRealPart,
    EntryBounds,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::BallCondition => "ball condition failed",
            FailureReason::StrictDominance => "strict dominance failed",
            FailureReason::PairCondition => "pair condition failed",
            FailureReason::BandCondition => "band condition failed",
            FailureReason::NonPositiveRealProduct => "Re(Gamma conj(gamma)) is not positive",
            FailureReason::DegenerateSum => "Gamma + gamma vanishes",
            FailureReason::NonPositiveBandFloor => "band floor m is not positive",
            FailureReason::VanishingInnerProduct => "inner product vanishes",
            FailureReason::VanishingRealPart => "real part of the inner product vanishes",
            FailureReason::EntryBounds => "entries outside their declared bounds",
        })
    }
}

/// A secondary inequality emitted next to the main one: an equivalent form,
/// a weaker chained bound, or a link of a chain.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Companion {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub preconditions: Vec<ConditionReport>,
    /// Set when a hypothesis failed; `lhs`, `rhs`, `slack` and `holds` are then absent.
    pub failure: Option<FailureReason>,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub holds: Option<bool>,
    /// Attained within `eq_tol * scale`, judged from the slack itself.
    pub equality: bool,
    /// The published equality characterization, evaluated independently.
    pub equality_conditions: Option<bool>,
    pub companions: Vec<Companion>,
    pub scale: f64,
    pub tol: f64,
    pub eq_tol: f64,
}

impl BoundReport {
    pub fn evaluated(&self) -> bool {
        self.failure.is_none()
    }

    /// True when the inequality was evaluated and found violated beyond tolerance.
    pub fn violated(&self) -> bool {
        self.holds == Some(false) || self.companions.iter().any(|c| !c.holds)
    }

    /// Slack divided by scale; `None` when not evaluated.
    pub fn relative_slack(&self) -> Option<f64> {
        self.slack.map(|s| s / self.scale)
    }

    pub fn companion(&self, label: &str) -> Option<&Companion> {
        self.companions.iter().find(|c| c.label == label)
    }
}

/// Accumulates preconditions for one evaluation.
pub(crate) struct Draft {
    theorem: TheoremId,
    tol: Tolerance,
    preconditions: Vec<ConditionReport>,
    companions: Vec<Companion>,
    equality_conditions: Option<bool>,
}

impl Draft {
    pub fn new(theorem: TheoremId, tol: Tolerance) -> Self {
        Draft {
            theorem,
            tol,
            preconditions: Vec::new(),
            companions: Vec::new(),
            equality_conditions: None,
        }
    }

    /// Records `c`; returns whether it is satisfied.
    pub fn check(&mut self, c: ConditionReport) -> bool {
        let ok = c.satisfied;
        self.preconditions.push(c);
        ok
    }

    /// Records a predicate that has no graded residual.
    pub fn check_flag(
        &mut self,
        name: &str,
        satisfied: bool,
        residual: f64,
        detail: String,
    ) -> bool {
        self.check(ConditionReport {
            name: name.to_string(),
            satisfied,
            residual,
            scale: scale_of(&[residual]),
            boundary: false,
            detail,
        })
    }

    pub fn fail(self, reason: FailureReason) -> BoundReport {
        BoundReport {
            theorem: self.theorem,
            preconditions: self.preconditions,
            failure: Some(reason),
            lhs: None,
            rhs: None,
            slack: None,
            holds: None,
            equality: false,
            equality_conditions: None,
            companions: Vec::new(),
            scale: 1.0,
            tol: self.tol.tol,
            eq_tol: self.tol.eq_tol,
        }
    }

    pub fn companion(&mut self, label: &str, lhs: f64, rhs: f64, extra_scale: &[f64]) {
        let slack = rhs - lhs;
        let mut terms = vec![lhs, rhs];
        terms.extend_from_slice(extra_scale);
        self.companions.push(Companion {
            label: label.to_string(),
            lhs,
            rhs,
            slack,
            holds: self.tol.admits(slack, scale_of(&terms)),
        });
    }

    pub fn equality_conditions(&mut self, holds: bool) {
        self.equality_conditions = Some(holds);
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    /// Finalizes with `lhs <= rhs`. `extra_scale` lists further magnitudes that
    /// entered the two sides.
    pub fn finish(self, lhs: f64, rhs: f64, extra_scale: &[f64]) -> BoundReport {
        let slack = rhs - lhs;
        let mut terms = vec![lhs, rhs];
        terms.extend_from_slice(extra_scale);
        let scale = scale_of(&terms);
        let holds = self.tol.admits(slack, scale);
        BoundReport {
            theorem: self.theorem,
            preconditions: self.preconditions,
            failure: None,
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
            holds: Some(holds),
            equality: holds && self.tol.is_tight(slack, scale),
            equality_conditions: self.equality_conditions,
            companions: self.companions,
            scale,
            tol: self.tol.tol,
            eq_tol: self.tol.eq_tol,
        }
    }
}
