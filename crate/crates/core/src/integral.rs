//! Weighted integral forms of the bounds, reduced to finite weighted spaces.
//!
//! A function sampled at nodes `t_k` with density values `rho_k` and measure
//! weights `mu_k` becomes a vector in the space with weights
//! `w_k = rho_k mu_k`. A positive discrete measure is itself a measure space,
//! so every integral statement below is exact for the discrete measure it is
//! given; quadrature only enters when the data approximate a continuum.

use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::bounds::{km_ball_rhs, Gram};
use crate::conditions::{ball_parts, check_pair, extract_band, RatioBand, ScalarPair};
use crate::error::{Error, Result};
use crate::report::{BoundReport, Draft, FailureReason, TheoremId};
use crate::space::{Scalar, Vector, WeightedSpace};
use crate::tolerance::{scale_of, Tolerance, DENOMINATOR_FLOOR};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledFunction {
    nodes: Vec<f64>,
    values: Vec<Scalar>,
    rho: Vec<f64>,
    mu_weights: Vec<f64>,
}

impl SampledFunction {
    pub fn new(
        nodes: Vec<f64>,
        values: Vec<Scalar>,
        rho: Vec<f64>,
        mu_weights: Vec<f64>,
    ) -> Result<Self> {
        let n = nodes.len();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "a sampled function needs at least one node".into(),
            ));
        }
        for len in [values.len(), rho.len(), mu_weights.len()] {
            if len != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: len,
                });
            }
        }
        if nodes
            .iter()
            .chain(&rho)
            .chain(&mu_weights)
            .any(|v| !v.is_finite())
            || values
                .iter()
                .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("sampled function"));
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "nodes must be strictly increasing".into(),
            ));
        }
        if rho.iter().chain(&mu_weights).any(|&v| v < 0.0) {
            return Err(Error::InvalidWeights(
                "rho and mu weights must be non-negative".into(),
            ));
        }
        Ok(SampledFunction {
            nodes,
            values,
            rho,
            mu_weights,
        })
    }

    /// Samples a real function on a quadrature rule with density `rho`.
    pub fn from_fn(
        rule: &QuadratureRule,
        f: impl Fn(f64) -> f64,
        rho: impl Fn(f64) -> f64,
    ) -> Result<Self> {
        SampledFunction::new(
            rule.nodes.clone(),
            rule.nodes.iter().map(|&t| Scalar::new(f(t), 0.0)).collect(),
            rule.nodes.iter().map(|&t| rho(t)).collect(),
            rule.weights.clone(),
        )
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn rho(&self) -> &[f64] {
        &self.rho
    }

    pub fn mu_weights(&self) -> &[f64] {
        &self.mu_weights
    }
}

/// Nodes and non-negative weights of a discrete measure.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// Composite midpoint rule with `n` cells on `[a, b]`.
    pub fn midpoint(a: f64, b: f64, n: usize) -> Result<Self> {
        check_interval(a, b, n, 1)?;
        let h = (b - a) / n as f64;
        Ok(QuadratureRule {
            nodes: (0..n).map(|k| a + (k as f64 + 0.5) * h).collect(),
            weights: vec![h; n],
        })
    }

    /// Composite trapezoid rule on `n >= 2` equispaced nodes of `[a, b]`.
    pub fn trapezoid(a: f64, b: f64, n: usize) -> Result<Self> {
        check_interval(a, b, n, 2)?;
        let h = (b - a) / (n - 1) as f64;
        let nodes: Vec<f64> = (0..n).map(|k| a + k as f64 * h).collect();
        QuadratureRule::trapezoid_on(&nodes)
    }

    /// Trapezoid weights on an arbitrary strictly increasing grid.
    pub fn trapezoid_on(nodes: &[f64]) -> Result<Self> {
        if nodes.len() < 2
            || nodes
                .windows(2)
                .any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less))
        {
            return Err(Error::InvalidParameter(
                "trapezoid rule needs at least two strictly increasing nodes".into(),
            ));
        }
        let n = nodes.len();
        let mut weights = vec![0.0; n];
        for (k, w) in nodes.windows(2).enumerate() {
            let half = 0.5 * (w[1] - w[0]);
            weights[k] += half;
            weights[k + 1] += half;
        }
        Ok(QuadratureRule {
            nodes: nodes.to_vec(),
            weights,
        })
    }
}

fn check_interval(a: f64, b: f64, n: usize, min_n: usize) -> Result<()> {
    if !(a.is_finite() && b.is_finite() && a < b) || n < min_n {
        return Err(Error::InvalidParameter(format!(
            "need a finite interval a < b and at least {min_n} nodes, got [{a}, {b}] with {n}"
        )));
    }
    Ok(())
}

/// Vectors of sample values and the space with weights `rho_k mu_k`.
pub fn discretize(
    f: &SampledFunction,
    g: &SampledFunction,
) -> Result<(Vector, Vector, WeightedSpace)> {
    if f.nodes.len() != g.nodes.len() {
        return Err(Error::DimensionMismatch {
            expected: f.nodes.len(),
            found: g.nodes.len(),
        });
    }
    if f.nodes != g.nodes || f.rho != g.rho || f.mu_weights != g.mu_weights {
        return Err(Error::InvalidParameter(
            "f and g must share nodes, rho and mu weights".into(),
        ));
    }
    let weights = f
        .rho
        .iter()
        .zip(&f.mu_weights)
        .map(|(r, m)| r * m)
        .collect();
    Ok((
        Vector::new(f.values.clone())?,
        Vector::new(g.values.clone())?,
        WeightedSpace::new(weights)?,
    ))
}

/// Integral Schwarz gap against a bound that is a multiple of the moduli:
///
/// `int rho |f|^2 * int rho |g|^2 - |int rho f conj g|^2
///   <= 2 ||g|| |<f, g>| (||g|| - sqrt(||g||^2 - r^2))`
///
/// under `int rho |f - g|^2 <= r^2 < int rho |g|^2` and `<f, g> != 0`.
pub fn prop_integral_ball(
    f: &SampledFunction,
    g: &SampledFunction,
    r: f64,
    tol: Tolerance,
) -> Result<BoundReport> {
    let (x, y, s) = discretize(f, g)?;
    integral_ball_in(&x, &y, r, &s, tol)
}

pub(crate) fn integral_ball_in(
    x: &Vector,
    y: &Vector,
    r: f64,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::PropIntegralBall, tol);
    let parts = ball_parts(x, y, r, true, s, tol)?;
    let (distance, norm_g, dominance_failed) =
        (parts.distance, parts.norm_a, parts.dominance_failed);
    if !d.check(parts.report) {
        return Ok(d.fail(if dominance_failed {
            FailureReason::StrictDominance
        } else {
            FailureReason::BallCondition
        }));
    }
    let gram = Gram::new(x, y, s)?;
    let modulus = gram.ip.norm();
    if !d.check_flag(
        "<f, g>",
        modulus > DENOMINATOR_FLOOR,
        modulus,
        format!("|<f, g>| = {modulus:e}"),
    ) {
        return Ok(d.fail(FailureReason::VanishingInnerProduct));
    }
    let rhs = km_ball_rhs(norm_g, r) * gram.yy * modulus;
    let target = norm_g * ((norm_g - r) * (norm_g + r)).sqrt();
    let close = |a: f64, b: f64| tol.is_tight(a - b, scale_of(&[a, b]));
    d.equality_conditions(
        close(distance, r) && close(gram.ip.re, modulus) && close(modulus, target),
    );
    Ok(d.finish(gram.gap, rhs, &[gram.xx * gram.yy]))
}

/// `int rho |f|^2 * int rho |g|^2 - |int rho f conj g|^2
///   <= (|Gamma + gamma| - 2 sqrt(Re(Gamma conj gamma))) |<f, g>| int rho |g|^2`
/// under `Re(Gamma conj gamma) > 0` and the integrated pair condition.
pub fn prop_integral_pair(
    f: &SampledFunction,
    g: &SampledFunction,
    p: &ScalarPair,
    tol: Tolerance,
) -> Result<BoundReport> {
    let (x, y, s) = discretize(f, g)?;
    integral_pair_in(TheoremId::PropIntegralPair, &x, &y, p, &s, tol)
}

pub(crate) fn integral_pair_in(
    theorem: TheoremId,
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(theorem, tol);
    let prod = p.real_product();
    if !d.check_flag(
        "positive_real_product",
        p.positive_real_product(),
        prod,
        format!("Re(Gamma conj(gamma)) = {prod:e}"),
    ) {
        return Ok(d.fail(if theorem == TheoremId::CorIntegralBand {
            FailureReason::NonPositiveBandFloor
        } else {
            FailureReason::NonPositiveRealProduct
        }));
    }
    let cond = check_pair(x, y, p, s, tol)?;
    let tight = cond.is_tight(tol);
    if !d.check(cond) {
        return Ok(d.fail(FailureReason::PairCondition));
    }
    let gram = Gram::new(x, y, s)?;
    let modulus = gram.ip.norm();
    let rhs = p.km_coefficient() * modulus * gram.yy;
    let sum = p.upper + p.lower;
    let aligned = (sum.conj() * gram.ip).re;
    let close = |a: f64, b: f64| tol.is_tight(a - b, scale_of(&[a, b]));
    d.equality_conditions(
        tight && close(aligned, sum.norm() * modulus) && close(modulus, prod.sqrt() * gram.yy),
    );
    Ok(d.finish(gram.gap, rhs, &[gram.xx * gram.yy]))
}

/// Band form of [`prop_integral_pair`]: coefficient `(sqrt(M) - sqrt(m))^2`,
/// hypothesis `int Re[(M g - f)(conj f - m conj g)] rho dmu >= 0` with `m > 0`.
pub fn cor_integral_band(
    f: &SampledFunction,
    g: &SampledFunction,
    b: &RatioBand,
    tol: Tolerance,
) -> Result<BoundReport> {
    let (x, y, s) = discretize(f, g)?;
    integral_band_in(&x, &y, b, &s, tol)
}

pub(crate) fn integral_band_in(
    x: &Vector,
    y: &Vector,
    b: &RatioBand,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    if b.m <= 0.0 {
        let mut d = Draft::new(TheoremId::CorIntegralBand, tol);
        d.check_flag("band_floor", false, b.m, format!("m = {:e}", b.m));
        return Ok(d.fail(FailureReason::NonPositiveBandFloor));
    }
    let mut report = integral_pair_in(TheoremId::CorIntegralBand, x, y, &b.as_pair(), s, tol)?;
    if let Some(c) = report
        .preconditions
        .iter_mut()
        .find(|c| c.name == "pair_quadratic")
    {
        c.name = "band".into();
    }
    if report.failure == Some(FailureReason::PairCondition) {
        report.failure = Some(FailureReason::BandCondition);
    }
    Ok(report)
}

fn require_nonneg_real(v: &Vector, s: &WeightedSpace, name: &str) -> Result<()> {
    s.check_member(v)?;
    if !v.is_real() {
        return Err(Error::Domain(format!("{name} must be real-valued")));
    }
    if let Some(k) = s.support().find(|&k| v.coords()[k].re < 0.0) {
        return Err(Error::Domain(format!("{name} is negative at index {k}")));
    }
    Ok(())
}

/// Real non-negative form with the band extracted from the data:
/// `int rho f^2 * int rho g^2 - (int rho f g)^2 <= (sqrt(M) - sqrt(m))^2 int rho f g * int rho g^2`
/// where `[m, M]` is the tightest band containing `f / g` on the support.
pub fn real_nonneg_km(
    f: &SampledFunction,
    g: &SampledFunction,
    tol: Tolerance,
) -> Result<BoundReport> {
    let (x, y, s) = discretize(f, g)?;
    real_nonneg_km_in(&x, &y, &s, tol)
}

pub(crate) fn real_nonneg_km_in(
    x: &Vector,
    y: &Vector,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    require_nonneg_real(x, s, "f")?;
    require_nonneg_real(y, s, "g")?;
    let band = extract_band(x, y, s)?;
    let mut d = Draft::new(TheoremId::RealNonnegKm, tol);
    d.check_flag(
        "extracted_band",
        true,
        band.big_m - band.m,
        format!("m = {:e}, M = {:e}", band.m, band.big_m),
    );
    let gram = Gram::new(x, y, s)?;
    let rhs = band.km_coefficient() * gram.ip.re * gram.yy;
    Ok(d.finish(gram.gap, rhs, &[gram.xx * gram.yy]))
}

/// Weighted Klamkin-McLenaghan inequality for non-negative real tuples:
/// `sum w x^2 / sum w x y - sum w x y / sum w y^2 <= (sqrt(M) - sqrt(m))^2`
/// with `[m, M]` the tightest band containing `x_k / y_k` on the support.
pub fn discrete_km(x: &[f64], y: &[f64], w: &[f64], tol: Tolerance) -> Result<BoundReport> {
    let s = WeightedSpace::new(w.to_vec())?;
    let (x, y) = (Vector::from_real(x)?, Vector::from_real(y)?);
    discrete_km_in(&x, &y, &s, tol)
}

pub(crate) fn discrete_km_in(
    x: &Vector,
    y: &Vector,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    require_nonneg_real(x, s, "x")?;
    require_nonneg_real(y, s, "y")?;
    let band = extract_band(x, y, s)?;
    let mut d = Draft::new(TheoremId::DiscreteKm, tol);
    d.check_flag(
        "extracted_band",
        true,
        band.big_m - band.m,
        format!("m = {:e}, M = {:e}", band.m, band.big_m),
    );
    let gram = Gram::new(x, y, s)?;
    let cross = gram.ip.re;
    if !d.check_flag(
        "sum w x y",
        cross > DENOMINATOR_FLOOR,
        cross,
        format!("sum w x y = {cross:e}"),
    ) {
        return Ok(d.fail(FailureReason::VanishingInnerProduct));
    }
    let lhs = gram.gap / (cross * gram.yy);
    Ok(d.finish(
        lhs,
        band.km_coefficient(),
        &[gram.xx / cross, cross / gram.yy],
    ))
}

/// Entry bounds `0 < a <= a_k <= A`, `0 < b <= b_k <= B`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntryBounds {
    pub a: f64,
    #[serde(rename = "A")]
    pub big_a: f64,
    pub b: f64,
    #[serde(rename = "B")]
    pub big_b: f64,
}

impl EntryBounds {
    pub fn new(a: f64, big_a: f64, b: f64, big_b: f64) -> Result<Self> {
        let ok = [a, big_a, b, big_b].iter().all(|v| v.is_finite())
            && 0.0 < a
            && a <= big_a
            && 0.0 < b
            && b <= big_b;
        if !ok {
            return Err(Error::InvalidParameter(format!(
                "need 0 < a <= A and 0 < b <= B, got a = {a}, A = {big_a}, b = {b}, B = {big_b}"
            )));
        }
        Ok(EntryBounds { a, big_a, b, big_b })
    }

    /// The ratio band `[a / B, A / b]` the bounds induce on `a_k / b_k`.
    pub fn induced_band(&self) -> RatioBand {
        RatioBand {
            m: self.a / self.big_b,
            big_m: self.big_a / self.b,
        }
    }

    /// `(sqrt(A / b) - sqrt(a / B))^2`.
    pub fn coefficient(&self) -> f64 {
        self.induced_band().km_coefficient()
    }
}

/// Unweighted Shisha-Mond inequality
/// `sum a^2 / sum a b - sum a b / sum b^2 <= (sqrt(A / b) - sqrt(a / B))^2`.
pub fn shisha_mond(
    a_vec: &[f64],
    b_vec: &[f64],
    bounds: &EntryBounds,
    tol: Tolerance,
) -> Result<BoundReport> {
    if a_vec.len() != b_vec.len() {
        return Err(Error::DimensionMismatch {
            expected: a_vec.len(),
            found: b_vec.len(),
        });
    }
    let s = WeightedSpace::uniform(a_vec.len())?;
    let (x, y) = (Vector::from_real(a_vec)?, Vector::from_real(b_vec)?);
    let mut d = Draft::new(TheoremId::ShishaMond, tol);

    let margin = a_vec
        .iter()
        .map(|&v| (v - bounds.a).min(bounds.big_a - v))
        .chain(b_vec.iter().map(|&v| (v - bounds.b).min(bounds.big_b - v)))
        .fold(f64::INFINITY, f64::min);
    let scale = scale_of(&[bounds.big_a, bounds.big_b]);
    let inside = tol.admits(margin, scale);
    if !d.check_flag(
        "entry_bounds",
        inside,
        margin,
        format!("min entry margin = {margin:e}"),
    ) {
        return Ok(d.fail(FailureReason::EntryBounds));
    }
    let gram = Gram::new(&x, &y, &s)?;
    let cross = gram.ip.re;
    let lhs = gram.gap / (cross * gram.yy);
    Ok(d.finish(
        lhs,
        bounds.coefficient(),
        &[gram.xx / cross, cross / gram.yy],
    ))
}

#[derive(Debug, Deserialize)]
struct SampleRow {
    t: f64,
    f_re: f64,
    f_im: f64,
    g_re: f64,
    g_im: f64,
    rho: f64,
    mu_weight: f64,
}

/// Reads `t, f_re, f_im, g_re, g_im, rho, mu_weight` rows (header required)
/// into the pair `(f, g)`.
pub fn read_samples_csv<R: Read>(reader: R) -> Result<(SampledFunction, SampledFunction)> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| Error::InvalidParameter(format!("csv header: {e}")))?
        .clone();
    const EXPECTED: [&str; 7] = ["t", "f_re", "f_im", "g_re", "g_im", "rho", "mu_weight"];
    if headers.len() != EXPECTED.len() || headers.iter().zip(EXPECTED).any(|(h, e)| h != e) {
        return Err(Error::InvalidParameter(format!(
            "csv header must be `{}`, got `{}`",
            EXPECTED.join(","),
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let (mut t, mut fv, mut gv, mut rho, mut mu) = (vec![], vec![], vec![], vec![], vec![]);
    for (line, row) in rdr.deserialize::<SampleRow>().enumerate() {
        let row = row.map_err(|e| Error::InvalidParameter(format!("csv row {}: {e}", line + 1)))?;
        t.push(row.t);
        fv.push(Scalar::new(row.f_re, row.f_im));
        gv.push(Scalar::new(row.g_re, row.g_im));
        rho.push(row.rho);
        mu.push(row.mu_weight);
    }
    Ok((
        SampledFunction::new(t.clone(), fv, rho.clone(), mu.clone())?,
        SampledFunction::new(t, gv, rho, mu)?,
    ))
}
