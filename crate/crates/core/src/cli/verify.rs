//! Randomized certification of every inequality on seeded instances.

use std::fmt::Write as _;

use crate::bounds::{
    cor_km_pair, cor_pair_additive, cor_pair_multiplicative, km_band, km_band_re,
    km_quadratic_forms, prop_sgn_chain, thm_additive, thm_km_abstract, thm_km_abstract_re,
    thm_premultiplicative,
};
use crate::conditions::{RatioBand, ScalarPair};
use crate::error::Result;
use crate::integral::{
    cor_integral_band, discrete_km, prop_integral_ball, prop_integral_pair, real_nonneg_km,
    shisha_mond, EntryBounds, SampledFunction,
};
use crate::report::{BoundReport, TheoremId};
use crate::sampling::{self, SampleRng};
use crate::sharpness::{
    equality_witness_additive, equality_witness_band, equality_witness_km,
    equality_witness_pair_additive, equality_witness_pair_multiplicative,
    equality_witness_premultiplicative,
};
use crate::space::{Vector, WeightedSpace};
use crate::tolerance::Tolerance;

/// Fresh draws allowed per instance before it counts as unsampled.
const MAX_REDRAWS: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremSummary {
    pub theorem: TheoremId,
    pub instances: usize,
    /// Draws whose hypotheses did not survive rounding and were redrawn.
    pub redrawn: usize,
    pub violations: usize,
    /// Smallest `slack / scale` over all evaluated instances.
    pub min_relative_slack: f64,
    /// Whether the theorem's equality witness evaluates with `equality = true`.
    pub witness_equality: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySummary {
    pub seed: u64,
    pub per_instance: usize,
    pub dims: Vec<usize>,
    pub theorems: Vec<TheoremSummary>,
}

impl VerifySummary {
    pub fn violations(&self) -> usize {
        self.theorems.iter().map(|t| t.violations).sum()
    }

    pub fn witness_failures(&self) -> usize {
        self.theorems.iter().filter(|t| !t.witness_equality).count()
    }

    pub fn render(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        let mut s = format!(
            "seed {} instances {} dims {}\n",
            self.seed,
            self.per_instance,
            dims.join(",")
        );
        let _ = writeln!(
            s,
            "{:<26}{:>10}{:>10}{:>12}{:>18}  witness",
            "theorem", "instances", "redrawn", "violations", "min_rel_slack"
        );
        for t in &self.theorems {
            let _ = writeln!(
                s,
                "{:<26}{:>10}{:>10}{:>12}{:>18.6e}  {}",
                t.theorem.name(),
                t.instances,
                t.redrawn,
                t.violations,
                t.min_relative_slack,
                if t.witness_equality {
                    "equality"
                } else {
                    "MISSED"
                }
            );
        }
        let _ = writeln!(
            s,
            "total violations {}, witness failures {}",
            self.violations(),
            self.witness_failures()
        );
        s
    }
}

/// Embeds a discrete vector as samples on nodes `0, 1, ..` with density
/// `rho = w` and unit measure weights.
fn as_samples(v: &Vector, s: &WeightedSpace) -> Result<SampledFunction> {
    let n = v.len();
    SampledFunction::new(
        (0..n).map(|k| k as f64).collect(),
        v.coords().to_vec(),
        s.weights().to_vec(),
        vec![1.0; n],
    )
}

fn real_coords(v: &Vector) -> Vec<f64> {
    v.coords().iter().map(|z| z.re).collect()
}

/// Draws one instance for `t` and evaluates it.
fn draw(
    t: TheoremId,
    rng: &mut SampleRng,
    dims: &[usize],
    complex: bool,
    tol: Tolerance,
) -> Result<BoundReport> {
    use TheoremId::*;
    match t {
        ThmPremultiplicative | ThmKmAbstract | ThmKmAbstractRe | KmQuadraticForm
        | KmQuadraticFormRe | PropIntegralBall => {
            let b = sampling::ball(rng, dims, complex, true);
            let (x, a, r, s) = (&b.x, &b.a, b.r, &b.space);
            match t {
                ThmPremultiplicative => thm_premultiplicative(x, a, r, s, tol),
                ThmKmAbstract => thm_km_abstract(x, a, r, s, tol),
                ThmKmAbstractRe => thm_km_abstract_re(x, a, r, s, tol),
                PropIntegralBall => {
                    prop_integral_ball(&as_samples(x, s)?, &as_samples(a, s)?, r, tol)
                }
                _ => {
                    let forms = km_quadratic_forms(x, a, r, s, tol)?;
                    let mut report = if t == KmQuadraticForm {
                        forms.modulus_form
                    } else {
                        forms.real_part_form
                    };
                    if forms.real_part_dominated == Some(false) {
                        report.holds = Some(false);
                    }
                    Ok(report)
                }
            }
        }
        ThmAdditive => {
            let b = sampling::ball(rng, dims, complex, false);
            thm_additive(&b.x, &b.a, b.r, &b.space, tol)
        }
        CorPairMultiplicative | CorPairAdditive | CorKmPair | PropSgnChain | PropIntegralPair => {
            let p = sampling::pair(rng, dims, complex);
            let (x, y, pair, s) = (&p.x, &p.y, &p.pair, &p.space);
            match t {
                CorPairMultiplicative => cor_pair_multiplicative(x, y, pair, s, tol),
                CorPairAdditive => cor_pair_additive(x, y, pair, s, tol),
                CorKmPair => cor_km_pair(x, y, pair, s, tol),
                PropSgnChain => prop_sgn_chain(x, y, pair, s, tol),
                _ => prop_integral_pair(&as_samples(x, s)?, &as_samples(y, s)?, pair, tol),
            }
        }
        KmBand | KmBandRe | CorIntegralBand => {
            let b = sampling::band(rng, dims, complex);
            let (x, y, band, s) = (&b.x, &b.y, &b.band, &b.space);
            match t {
                KmBand => km_band(x, y, band, s, tol),
                KmBandRe => km_band_re(x, y, band, s, tol),
                _ => cor_integral_band(&as_samples(x, s)?, &as_samples(y, s)?, band, tol),
            }
        }
        RealNonnegKm | DiscreteKm => {
            let (x, y, s) = sampling::real_nonneg(rng, dims);
            if t == RealNonnegKm {
                real_nonneg_km(&as_samples(&x, &s)?, &as_samples(&y, &s)?, tol)
            } else {
                discrete_km(&real_coords(&x), &real_coords(&y), s.weights(), tol)
            }
        }
        ShishaMond => {
            let e = sampling::entry_bounded(rng, dims);
            shisha_mond(&e.a, &e.b, &e.bounds, tol)
        }
    }
}

/// Evaluates the equality witness of `t`; `true` when equality is detected.
pub fn witness_equality(t: TheoremId, tol: Tolerance) -> Result<bool> {
    use TheoremId::*;
    let unit2 = WeightedSpace::uniform(2)?;
    let pair = ScalarPair::real(1.0, 4.0)?;
    let band = RatioBand::positive(1.0, 4.0)?;
    let report = match t {
        ThmPremultiplicative => {
            let (x, a) = equality_witness_premultiplicative(1.0, 0.6, &unit2)?;
            thm_premultiplicative(&x, &a, 0.6, &unit2, tol)?
        }
        ThmAdditive => {
            let (x, a) = equality_witness_additive(1.0, 0.2f64.sqrt(), &unit2)?;
            thm_additive(&x, &a, 0.2f64.sqrt(), &unit2, tol)?
        }
        ThmKmAbstract | ThmKmAbstractRe | KmQuadraticForm | KmQuadraticFormRe
        | PropIntegralBall => {
            let (x, a) = equality_witness_km(1.0, 0.6, &unit2)?;
            match t {
                ThmKmAbstract => thm_km_abstract(&x, &a, 0.6, &unit2, tol)?,
                ThmKmAbstractRe => thm_km_abstract_re(&x, &a, 0.6, &unit2, tol)?,
                KmQuadraticForm => km_quadratic_forms(&x, &a, 0.6, &unit2, tol)?.modulus_form,
                KmQuadraticFormRe => km_quadratic_forms(&x, &a, 0.6, &unit2, tol)?.real_part_form,
                _ => prop_integral_ball(
                    &as_samples(&x, &unit2)?,
                    &as_samples(&a, &unit2)?,
                    0.6,
                    tol,
                )?,
            }
        }
        CorPairMultiplicative => {
            let (x, y, s) = equality_witness_pair_multiplicative(1.0, 4.0)?;
            cor_pair_multiplicative(&x, &y, &pair, &s, tol)?
        }
        CorPairAdditive => {
            let (x, y, s) = equality_witness_pair_additive(1.0, 4.0)?;
            cor_pair_additive(&x, &y, &pair, &s, tol)?
        }
        _ => {
            let (x, y, s) = equality_witness_band(1.0, 4.0)?;
            match t {
                CorKmPair => cor_km_pair(&x, &y, &pair, &s, tol)?,
                PropSgnChain => prop_sgn_chain(&x, &y, &pair, &s, tol)?,
                KmBand => km_band(&x, &y, &band, &s, tol)?,
                KmBandRe => km_band_re(&x, &y, &band, &s, tol)?,
                PropIntegralPair => {
                    prop_integral_pair(&as_samples(&x, &s)?, &as_samples(&y, &s)?, &pair, tol)?
                }
                CorIntegralBand => {
                    cor_integral_band(&as_samples(&x, &s)?, &as_samples(&y, &s)?, &band, tol)?
                }
                RealNonnegKm => real_nonneg_km(&as_samples(&x, &s)?, &as_samples(&y, &s)?, tol)?,
                DiscreteKm => discrete_km(&real_coords(&x), &real_coords(&y), s.weights(), tol)?,
                _ => {
                    let bounds = EntryBounds::new(1.0, 4.0, 1.0, 1.0)?;
                    shisha_mond(&[1.0, 1.0, 4.0], &[1.0, 1.0, 1.0], &bounds, tol)?
                }
            }
        }
    };
    Ok(report.equality)
}

fn needs_real_data(t: TheoremId) -> bool {
    matches!(
        t,
        TheoremId::RealNonnegKm | TheoremId::DiscreteKm | TheoremId::ShishaMond
    )
}

/// Runs `n` instances of `t` on its own ChaCha stream, so the result does not
/// depend on which other theorems are verified.
pub fn verify_theorem(
    t: TheoremId,
    seed: u64,
    n: usize,
    dims: &[usize],
    tol: Tolerance,
) -> Result<TheoremSummary> {
    let mut rng = sampling::rng(seed);
    let stream = TheoremId::ALL.iter().position(|&u| u == t).unwrap_or(0) as u64;
    rng.set_stream(stream);
    let mut summary = TheoremSummary {
        theorem: t,
        instances: 0,
        redrawn: 0,
        violations: 0,
        min_relative_slack: f64::INFINITY,
        witness_equality: witness_equality(t, tol)?,
    };
    for k in 0..n {
        let complex = k % 2 == 1 && !needs_real_data(t);
        for attempt in 0..MAX_REDRAWS {
            let report = draw(t, &mut rng, dims, complex, tol)?;
            if report.failure.is_some() {
                summary.redrawn += 1;
                if attempt + 1 == MAX_REDRAWS {
                    summary.violations += 1;
                }
                continue;
            }
            summary.instances += 1;
            if report.violated() {
                summary.violations += 1;
            }
            if let Some(rel) = report.relative_slack() {
                summary.min_relative_slack = summary.min_relative_slack.min(rel);
            }
            break;
        }
    }
    Ok(summary)
}

pub fn verify(seed: u64, n: usize, dims: &[usize], tol: Tolerance) -> Result<VerifySummary> {
    if n == 0 {
        return Err(crate::error::Error::InvalidParameter(
            "need at least one instance per theorem".into(),
        ));
    }
    sampling::check_dims(dims)?;
    let theorems = TheoremId::ALL
        .iter()
        .map(|&t| verify_theorem(t, seed, n, dims, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifySummary {
        seed,
        per_instance: n,
        dims: dims.to_vec(),
        theorems,
    })
}
