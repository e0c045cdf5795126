//! One-parameter sweeps written as CSV.

use std::io::Write;
use std::path::Path;

use serde::Serialize;

use super::input::{Num, Params, Problem, ProblemSpec};
use crate::error::{Error, Result};
use crate::report::{BoundReport, TheoremId};
use crate::sharpness::extremal_family;
use crate::space::{Vector, WeightedSpace};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepParam {
    Epsilon,
    R,
    #[value(name = "m")]
    LowerM,
    #[value(name = "M")]
    UpperM,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub parameter: f64,
    pub status: String,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    pub slack: Option<f64>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    pub achieved_constant: Option<f64>,
}

impl SweepRow {
    fn from_report(parameter: f64, r: &BoundReport, achieved_constant: Option<f64>) -> Self {
        let status = match (r.failure, r.violated()) {
            (Some(reason), _) => format!("precondition: {reason}"),
            (None, true) => "violated".into(),
            (None, false) => "ok".into(),
        };
        SweepRow {
            parameter,
            status,
            lhs: r.lhs,
            rhs: r.rhs,
            slack: r.slack,
            holds: r.holds,
            equality: r.failure.is_none().then_some(r.equality),
            achieved_constant,
        }
    }

    fn from_error(parameter: f64, e: &Error) -> Self {
        SweepRow {
            parameter,
            status: format!("error: {e}"),
            lhs: None,
            rhs: None,
            slack: None,
            holds: None,
            equality: None,
            achieved_constant: None,
        }
    }

    pub fn violated(&self) -> bool {
        self.status == "violated"
    }
}

/// `steps` points from `from` to `to` inclusive, evenly spaced or, with
/// `log`, geometrically spaced.
pub fn grid(from: f64, to: f64, steps: usize, log: bool) -> Result<Vec<f64>> {
    if steps == 0 || !from.is_finite() || !to.is_finite() {
        return Err(Error::InvalidParameter(
            "need finite endpoints and at least one step".into(),
        ));
    }
    if log && (from <= 0.0 || to <= 0.0) {
        return Err(Error::InvalidParameter(
            "a log grid needs positive endpoints".into(),
        ));
    }
    if steps == 1 {
        return Ok(vec![from]);
    }
    let last = (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| {
            let t = k as f64 / last;
            if k + 1 == steps {
                to
            } else if log {
                (from.ln() + t * (to.ln() - from.ln())).exp()
            } else {
                from + t * (to - from)
            }
        })
        .collect())
}

fn is_ball_theorem(t: TheoremId) -> bool {
    use TheoremId::*;
    matches!(
        t,
        ThmPremultiplicative
            | ThmAdditive
            | ThmKmAbstract
            | ThmKmAbstractRe
            | KmQuadraticForm
            | KmQuadraticFormRe
            | PropIntegralBall
    )
}

fn is_pair_theorem(t: TheoremId) -> bool {
    use TheoremId::*;
    matches!(
        t,
        CorPairMultiplicative | CorPairAdditive | CorKmPair | PropSgnChain | PropIntegralPair
    )
}

fn is_band_theorem(t: TheoremId) -> bool {
    matches!(
        t,
        TheoremId::KmBand | TheoremId::KmBandRe | TheoremId::CorIntegralBand
    )
}

/// Base problem when no input file is given: `x = a = (1, 0)` for radius
/// sweeps, the two-point band witness `x = (1, 4)`, `y = (1, 1)`, `w = (2, 1)`
/// with `[m, M] = [1, 4]` for band sweeps.
fn default_problem(param: SweepParam) -> Result<Problem> {
    let unit = Vector::from_real(&[1.0, 0.0])?;
    Ok(match param {
        SweepParam::Epsilon | SweepParam::R => Problem {
            space: WeightedSpace::uniform(2)?,
            x: unit.clone(),
            y: None,
            a: Some(unit),
            params: Params {
                r: Some(0.5),
                ..Params::default()
            },
        },
        SweepParam::LowerM | SweepParam::UpperM => Problem {
            space: WeightedSpace::new(vec![2.0, 1.0])?,
            x: Vector::from_real(&[1.0, 4.0])?,
            y: Some(Vector::from_real(&[1.0, 1.0])?),
            a: None,
            params: Params {
                gamma: Some(Num::Real(1.0)),
                big_gamma: Some(Num::Real(4.0)),
                m: Some(1.0),
                big_m: Some(4.0),
                ..Params::default()
            },
        },
    })
}

fn check_combination(theorem: TheoremId, param: SweepParam) -> Result<()> {
    let ok = match param {
        SweepParam::Epsilon | SweepParam::R => is_ball_theorem(theorem),
        SweepParam::LowerM | SweepParam::UpperM => {
            is_pair_theorem(theorem) || is_band_theorem(theorem)
        }
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{theorem} cannot be swept over {param:?}"
        )))
    }
}

/// One row per grid point. Parameter values outside a theorem's domain give
/// rows with a non-`ok` status instead of aborting.
pub fn sweep(
    theorem: TheoremId,
    param: SweepParam,
    values: &[f64],
    base: Option<&ProblemSpec>,
    tol: Tolerance,
) -> Result<Vec<SweepRow>> {
    check_combination(theorem, param)?;
    let base = match base {
        Some(spec) => spec.resolve()?,
        None => default_problem(param)?,
    };
    let rows = values
        .iter()
        .map(|&v| {
            let mut p = base.clone();
            let mut constant = None;
            let setup: Result<()> = match param {
                SweepParam::Epsilon => extremal_family(v, &p.space).map(|w| {
                    constant = Some(w.achieved_constant);
                    p.x = w.x;
                    p.a = Some(w.a);
                    p.y = None;
                    p.params.r = Some(w.r);
                }),
                SweepParam::R => {
                    p.params.r = Some(v);
                    Ok(())
                }
                SweepParam::LowerM => {
                    p.params.m = Some(v);
                    p.params.gamma = Some(Num::Real(v));
                    Ok(())
                }
                SweepParam::UpperM => {
                    p.params.big_m = Some(v);
                    p.params.big_gamma = Some(Num::Real(v));
                    Ok(())
                }
            };
            match setup.and_then(|_| p.evaluate(theorem, tol)) {
                Ok(r) => SweepRow::from_report(v, &r, constant),
                Err(e) => SweepRow::from_error(v, &e),
            }
        })
        .collect();
    Ok(rows)
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)
            .map_err(|e| Error::InvalidParameter(format!("csv: {e}")))?;
    }
    w.flush()
        .map_err(|e| Error::InvalidParameter(format!("csv: {e}")))
}

pub fn write_csv_file(rows: &[SweepRow], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path)
        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
    write_csv(rows, file)
}
