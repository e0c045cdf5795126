//! Reverse Schwarz inequalities over finite weighted inner-product spaces.
//!
//! The space is `C^n` (or `R^n`) with `<x, y> = sum w_k x_k conj(y_k)` for
//! non-negative weights `w`. The evaluators in [`bounds`] and [`integral`]
//! check the hypotheses of each inequality and report both sides, the slack
//! and whether equality is attained; [`sharpness`] builds the witnesses and
//! the extremal family for the sharp constant; [`sampling`] produces seeded
//! instances for randomized certification.

pub mod bounds;
pub mod cli;
pub mod conditions;
pub mod error;
pub mod integral;
pub mod report;
pub mod sampling;
pub mod sharpness;
pub mod space;
pub mod tolerance;

pub use bounds::{
    cor_km_pair, cor_pair_additive, cor_pair_multiplicative, km_ball_rhs, km_band, km_band_re,
    km_quadratic_forms, prop_sgn_chain, thm_additive, thm_km_abstract, thm_km_abstract_re,
    thm_premultiplicative, QuadraticForms,
};
pub use conditions::{
    check_ball, check_band, check_pair, check_pair_ball, check_pair_quadratic, check_pointwise,
    extract_band, ConditionReport, PointwiseKind, RatioBand, ScalarPair,
};
pub use error::{Error, Result};
pub use integral::{
    cor_integral_band, discrete_km, discretize, prop_integral_ball, prop_integral_pair,
    read_samples_csv, real_nonneg_km, shisha_mond, EntryBounds, QuadratureRule, SampledFunction,
};
pub use report::{BoundReport, Companion, FailureReason, TheoremId};
pub use sharpness::{achieved_constant_curve, extremal_family, ExtremalWitness};
pub use space::{Scalar, Vector, WeightedSpace};
pub use tolerance::Tolerance;
