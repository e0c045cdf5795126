//! Problem documents for `report` and `sweep`, and dispatch to the evaluators.

use std::fs::File;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::bounds::{
    cor_km_pair, cor_pair_additive, cor_pair_multiplicative, km_band, km_band_re,
    km_quadratic_forms, prop_sgn_chain, thm_additive, thm_km_abstract, thm_km_abstract_re,
    thm_premultiplicative,
};
use crate::conditions::{RatioBand, ScalarPair};
use crate::error::{Error, Result};
use crate::integral::{
    discrete_km_in, discretize, integral_ball_in, integral_band_in, integral_pair_in,
    read_samples_csv, real_nonneg_km_in, shisha_mond, EntryBounds,
};
use crate::report::{BoundReport, TheoremId};
use crate::space::{Scalar, Vector, WeightedSpace};
use crate::tolerance::Tolerance;

/// A scalar written either as a number or as `[re, im]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Real(f64),
    Complex([f64; 2]),
}

impl Num {
    pub fn value(self) -> Scalar {
        match self {
            Num::Real(re) => Scalar::new(re, 0.0),
            Num::Complex([re, im]) => Scalar::new(re, im),
        }
    }
}

impl From<Scalar> for Num {
    fn from(z: Scalar) -> Self {
        if z.im == 0.0 {
            Num::Real(z.re)
        } else {
            Num::Complex([z.re, z.im])
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<Num>,
    #[serde(default, rename = "Gamma", skip_serializing_if = "Option::is_none")]
    pub big_gamma: Option<Num>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    #[serde(default, rename = "M", skip_serializing_if = "Option::is_none")]
    pub big_m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shisha_mond: Option<EntryBounds>,
}

/// Input document. Unknown top-level keys are ignored, so a `report` output
/// (which adds `reports`) reads back as the same problem.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct ProblemSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<Num>>,
    /// CSV of samples (path relative to the document) supplying `x`, `y` and
    /// `weights = rho * mu_weight`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<PathBuf>,
    #[serde(default)]
    pub params: Params,
    #[serde(default)]
    pub theorems: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eq_tol: Option<f64>,
}

fn nums(v: &Vector) -> Vec<Num> {
    v.coords().iter().map(|&z| Num::from(z)).collect()
}

fn vector(v: &Option<Vec<Num>>) -> Result<Option<Vector>> {
    v.as_ref()
        .map(|v| Vector::new(v.iter().map(|n| n.value()).collect()))
        .transpose()
}

impl ProblemSpec {
    /// Reads a JSON problem, or a samples CSV (selecting `real_nonneg_km`).
    pub fn load(path: &Path) -> Result<ProblemSpec> {
        let open = |p: &Path| {
            File::open(p).map_err(|e| Error::InvalidParameter(format!("{}: {e}", p.display())))
        };
        let is_csv = path
            .extension()
            .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
        let mut spec = if is_csv {
            ProblemSpec {
                samples: Some(path.to_path_buf()),
                theorems: vec![TheoremId::RealNonnegKm.name().into()],
                ..ProblemSpec::default()
            }
        } else {
            serde_json::from_reader(open(path)?)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?
        };
        if let Some(rel) = spec.samples.take() {
            let csv_path = if is_csv {
                rel
            } else {
                path.parent().unwrap_or(Path::new("")).join(rel)
            };
            let (f, g) = read_samples_csv(open(&csv_path)?)?;
            let (x, y, s) = discretize(&f, &g)?;
            if spec.x.is_some() || spec.y.is_some() || spec.a.is_some() || spec.weights.is_some() {
                return Err(Error::InvalidParameter(
                    "samples cannot be combined with weights, x, y or a".into(),
                ));
            }
            spec.weights = Some(s.weights().to_vec());
            spec.x = Some(nums(&x));
            spec.y = Some(nums(&y));
        }
        Ok(spec)
    }

    /// Explicit `tol`/`eq_tol` first, then `SCHWARZ_TOL`, then the defaults.
    pub fn tolerance(&self) -> Result<Tolerance> {
        let mut t = Tolerance::from_env();
        if let Some(v) = self.tol {
            t.tol = v;
        }
        if let Some(v) = self.eq_tol {
            t.eq_tol = v;
        }
        if !(t.tol.is_finite() && t.tol >= 0.0 && t.eq_tol.is_finite() && t.eq_tol >= 0.0) {
            return Err(Error::InvalidParameter(
                "tolerances must be finite and non-negative".into(),
            ));
        }
        Ok(t)
    }

    /// Selected theorems in order; `km_quadratic_forms` expands to both forms.
    pub fn selected(&self) -> Result<Vec<TheoremId>> {
        if self.theorems.is_empty() {
            return Err(Error::InvalidParameter("no theorems selected".into()));
        }
        let mut out = Vec::new();
        for name in &self.theorems {
            let ids: Vec<TheoremId> = if name == "km_quadratic_forms" {
                vec![TheoremId::KmQuadraticForm, TheoremId::KmQuadraticFormRe]
            } else {
                vec![TheoremId::from_name(name)
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem `{name}`")))?]
            };
            for id in ids {
                if !out.contains(&id) {
                    out.push(id);
                }
            }
        }
        Ok(out)
    }

    pub fn resolve(&self) -> Result<Problem> {
        let x = vector(&self.x)?.ok_or_else(|| Error::InvalidParameter("missing `x`".into()))?;
        let space = match &self.weights {
            Some(w) => WeightedSpace::new(w.clone())?,
            None => WeightedSpace::uniform(x.len())?,
        };
        Ok(Problem {
            space,
            x,
            y: vector(&self.y)?,
            a: vector(&self.a)?,
            params: self.params.clone(),
        })
    }
}

/// A validated problem ready for evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub space: WeightedSpace,
    pub x: Vector,
    pub y: Option<Vector>,
    pub a: Option<Vector>,
    pub params: Params,
}

fn missing(theorem: TheoremId, what: &str) -> Error {
    Error::InvalidParameter(format!("{theorem} needs {what}"))
}

impl Problem {
    /// `a`, falling back to `y`.
    fn center(&self, t: TheoremId) -> Result<&Vector> {
        self.a
            .as_ref()
            .or(self.y.as_ref())
            .ok_or_else(|| missing(t, "`a` (or `y`)"))
    }

    /// `y`, falling back to `a`.
    fn partner(&self, t: TheoremId) -> Result<&Vector> {
        self.y
            .as_ref()
            .or(self.a.as_ref())
            .ok_or_else(|| missing(t, "`y` (or `a`)"))
    }

    fn radius(&self, t: TheoremId) -> Result<f64> {
        self.params.r.ok_or_else(|| missing(t, "params.r"))
    }

    fn pair(&self, t: TheoremId) -> Result<ScalarPair> {
        match (self.params.gamma, self.params.big_gamma) {
            (Some(g), Some(big)) => ScalarPair::new(g.value(), big.value()),
            _ => Err(missing(t, "params.gamma and params.Gamma")),
        }
    }

    fn band(&self, t: TheoremId) -> Result<RatioBand> {
        match (self.params.m, self.params.big_m) {
            (Some(m), Some(big_m)) => RatioBand::new(m, big_m),
            _ => Err(missing(t, "params.m and params.M")),
        }
    }

    fn real_coords(v: &Vector, t: TheoremId) -> Result<Vec<f64>> {
        if !v.is_real() {
            return Err(Error::Domain(format!("{t} needs real data")));
        }
        Ok(v.coords().iter().map(|z| z.re).collect())
    }

    pub fn evaluate(&self, t: TheoremId, tol: Tolerance) -> Result<BoundReport> {
        let (x, s) = (&self.x, &self.space);
        use TheoremId::*;
        match t {
            ThmPremultiplicative => {
                thm_premultiplicative(x, self.center(t)?, self.radius(t)?, s, tol)
            }
            ThmAdditive => thm_additive(x, self.center(t)?, self.radius(t)?, s, tol),
            ThmKmAbstract => thm_km_abstract(x, self.center(t)?, self.radius(t)?, s, tol),
            ThmKmAbstractRe => thm_km_abstract_re(x, self.center(t)?, self.radius(t)?, s, tol),
            KmQuadraticForm | KmQuadraticFormRe => {
                let forms = km_quadratic_forms(x, self.center(t)?, self.radius(t)?, s, tol)?;
                Ok(if t == KmQuadraticForm {
                    forms.modulus_form
                } else {
                    forms.real_part_form
                })
            }
            CorPairMultiplicative => {
                cor_pair_multiplicative(x, self.partner(t)?, &self.pair(t)?, s, tol)
            }
            CorPairAdditive => cor_pair_additive(x, self.partner(t)?, &self.pair(t)?, s, tol),
            CorKmPair => cor_km_pair(x, self.partner(t)?, &self.pair(t)?, s, tol),
            PropSgnChain => prop_sgn_chain(x, self.partner(t)?, &self.pair(t)?, s, tol),
            KmBand => km_band(x, self.partner(t)?, &self.band(t)?, s, tol),
            KmBandRe => km_band_re(x, self.partner(t)?, &self.band(t)?, s, tol),
            PropIntegralBall => integral_ball_in(x, self.partner(t)?, self.radius(t)?, s, tol),
            PropIntegralPair => integral_pair_in(t, x, self.partner(t)?, &self.pair(t)?, s, tol),
            CorIntegralBand => integral_band_in(x, self.partner(t)?, &self.band(t)?, s, tol),
            RealNonnegKm => real_nonneg_km_in(x, self.partner(t)?, s, tol),
            DiscreteKm => discrete_km_in(x, self.partner(t)?, s, tol),
            ShishaMond => {
                let bounds = self
                    .params
                    .shisha_mond
                    .ok_or_else(|| missing(t, "params.shisha_mond"))?;
                let bounds = EntryBounds::new(bounds.a, bounds.big_a, bounds.b, bounds.big_b)?;
                let a = Problem::real_coords(x, t)?;
                let b = Problem::real_coords(self.partner(t)?, t)?;
                shisha_mond(&a, &b, &bounds, tol)
            }
        }
    }
}
