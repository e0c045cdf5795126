//! Hypothesis checkers: enclosure balls, the (gamma, Gamma) pair condition,
//! ratio bands and their pointwise sufficient forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::{real, Scalar, Vector, WeightedSpace};
use crate::tolerance::{scale_of, Tolerance, DENOMINATOR_FLOOR};

/// The scalars `gamma` (lower) and `Gamma` (upper) of the pair condition
/// `Re<Gamma y - x, x - gamma y> >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScalarPair {
    pub lower: Scalar,
    pub upper: Scalar,
}

impl ScalarPair {
    pub fn new(lower: Scalar, upper: Scalar) -> Result<Self> {
        for z in [lower, upper] {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite("scalar pair"));
            }
        }
        Ok(ScalarPair { lower, upper })
    }

    pub fn real(lower: f64, upper: f64) -> Result<Self> {
        ScalarPair::new(real(lower), real(upper))
    }

    /// `Re(Gamma * conj(gamma))`.
    pub fn real_product(&self) -> f64 {
        (self.upper * self.lower.conj()).re
    }

    pub fn positive_real_product(&self) -> bool {
        self.real_product() > DENOMINATOR_FLOOR
    }

    pub fn nondegenerate_sum(&self) -> bool {
        (self.upper + self.lower).norm() > DENOMINATOR_FLOOR
    }

    /// `(Gamma + gamma) / 2`.
    pub fn center(&self) -> Scalar {
        (self.upper + self.lower) * 0.5
    }

    /// `|Gamma - gamma| / 2`.
    pub fn half_width(&self) -> f64 {
        0.5 * (self.upper - self.lower).norm()
    }

    /// `|Gamma + gamma| - 2 sqrt(Re(Gamma conj(gamma)))`, evaluated as
    /// `|Gamma - gamma|^2 / (|Gamma + gamma| + 2 sqrt(Re(Gamma conj(gamma))))`.
    ///
    /// Requires a positive real product.
    pub fn km_coefficient(&self) -> f64 {
        let sum = (self.upper + self.lower).norm();
        let diff = (self.upper - self.lower).norm();
        diff * diff / (sum + 2.0 * self.real_product().sqrt())
    }
}

/// Real ratio band `0 <= m <= M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioBand {
    pub m: f64,
    #[serde(rename = "M")]
    pub big_m: f64,
}

impl RatioBand {
    pub fn new(m: f64, big_m: f64) -> Result<Self> {
        if !m.is_finite() || !big_m.is_finite() {
            return Err(Error::NonFinite("ratio band"));
        }
        if m < 0.0 || m > big_m {
            return Err(Error::InvalidParameter(format!(
                "ratio band requires 0 <= m <= M, got m = {m}, M = {big_m}"
            )));
        }
        Ok(RatioBand { m, big_m })
    }

    /// Band with `m > 0`, as required by the inner-product forms.
    pub fn positive(m: f64, big_m: f64) -> Result<Self> {
        let b = RatioBand::new(m, big_m)?;
        b.require_positive()?;
        Ok(b)
    }

    pub fn require_positive(&self) -> Result<()> {
        if self.m > 0.0 {
            Ok(())
        } else {
            Err(Error::InvalidParameter(
                "ratio band floor m must be positive".into(),
            ))
        }
    }

    pub fn as_pair(&self) -> ScalarPair {
        ScalarPair {
            lower: real(self.m),
            upper: real(self.big_m),
        }
    }

    /// `(sqrt(M) - sqrt(m))^2`, evaluated as `(M - m)^2 / (sqrt(M) + sqrt(m))^2`.
    pub fn km_coefficient(&self) -> f64 {
        let d = self.big_m - self.m;
        if d == 0.0 {
            return 0.0;
        }
        d * d / (self.big_m + self.m + 2.0 * (self.big_m * self.m).sqrt())
    }
}

/// Outcome of one hypothesis check.
///
/// `residual` is a signed margin, non-negative exactly when the condition holds
/// without slack. `satisfied` admits `residual >= -tol * scale`; the strict
/// half of a dominance test (`r < ||a||`) instead needs a margin above
/// `tol * scale`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub name: String,
    pub satisfied: bool,
    pub residual: f64,
    pub scale: f64,
    /// Residual within `tol * scale` of zero.
    pub boundary: bool,
    pub detail: String,
}

impl ConditionReport {
    fn graded(name: &str, residual: f64, scale: f64, tol: Tolerance, detail: String) -> Self {
        ConditionReport {
            name: name.to_string(),
            satisfied: tol.admits(residual, scale),
            residual,
            scale,
            boundary: residual.abs() <= tol.tol * scale,
            detail,
        }
    }

    /// Residual within `eq_tol * scale` of zero.
    pub fn is_tight(&self, tol: Tolerance) -> bool {
        tol.is_tight(self.residual, self.scale)
    }
}

pub(crate) struct BallParts {
    pub report: ConditionReport,
    pub distance: f64,
    pub norm_a: f64,
    pub dominance_failed: bool,
}

pub(crate) fn ball_parts(
    x: &Vector,
    a: &Vector,
    r: f64,
    strict_dominance: bool,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BallParts> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive, got {r}"
        )));
    }
    let distance = s.distance(x, a)?;
    let norm_a = s.norm(a)?;
    let scale = scale_of(&[r, distance, norm_a]);
    let ball_margin = r - distance;
    let mut residual = ball_margin;
    let mut dominance_failed = false;
    let mut detail = format!("||x - a|| = {distance:e}, r = {r:e}");
    if strict_dominance {
        let dom = norm_a - r;
        residual = residual.min(dom);
        dominance_failed = dom <= tol.tol * scale;
        detail.push_str(&format!(", ||a|| = {norm_a:e}"));
        if dominance_failed {
            detail.push_str("; strict dominance failed");
        }
    }
    let mut report = ConditionReport::graded("ball", residual, scale, tol, detail);
    if strict_dominance {
        report.satisfied = tol.admits(ball_margin, scale) && !dominance_failed;
        report.boundary = ball_margin.abs() <= tol.tol * scale;
    }
    Ok(BallParts {
        report,
        distance,
        norm_a,
        dominance_failed,
    })
}

/// `||x - a|| <= r`, and with `strict_dominance` also `r < ||a||`.
pub fn check_ball(
    x: &Vector,
    a: &Vector,
    r: f64,
    strict_dominance: bool,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<ConditionReport> {
    ball_parts(x, a, r, strict_dominance, s, tol).map(|p| p.report)
}

/// Quadratic form of the pair condition: residual `Re<Gamma y - x, x - gamma y>`.
pub fn check_pair_quadratic(
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<ConditionReport> {
    let left = y.combine(p.upper, x, real(-1.0))?;
    let right = x.combine(real(1.0), y, -p.lower)?;
    let residual = s.inner(&left, &right)?.re;
    let radius = p.half_width() * s.norm(y)?;
    let scale = scale_of(&[s.norm(&left)? * s.norm(&right)?, radius * radius]);
    Ok(ConditionReport::graded(
        "pair_quadratic",
        residual,
        scale,
        tol,
        format!("Re<Gamma y - x, x - gamma y> = {residual:e}"),
    ))
}

/// Ball form of the pair condition: residual
/// `|Gamma - gamma| ||y|| / 2 - ||x - (Gamma + gamma)/2 y||`.
pub fn check_pair_ball(
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<ConditionReport> {
    let radius = p.half_width() * s.norm(y)?;
    let offset = s.norm(&x.combine(real(1.0), y, -p.center())?)?;
    let residual = radius - offset;
    Ok(ConditionReport::graded(
        "pair_ball",
        residual,
        scale_of(&[radius, offset]),
        tol,
        format!("||x - c y|| = {offset:e}, radius = {radius:e}"),
    ))
}

/// Pair condition as used by the evaluators: the quadratic form, with the ball
/// form as a second opinion. The two are algebraically identical, so a
/// disagreement can only be rounding at the boundary and is reported as
/// satisfied.
pub fn check_pair(
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<ConditionReport> {
    let quad = check_pair_quadratic(x, y, p, s, tol)?;
    let ball = check_pair_ball(x, y, p, s, tol)?;
    if quad.satisfied == ball.satisfied {
        return Ok(quad);
    }
    let mut r = quad;
    r.satisfied = true;
    r.boundary = true;
    r.detail.push_str("; satisfied (boundary)");
    Ok(r)
}

/// Band condition `Re<M y - x, x - m y> >= 0`; `b` must have `m > 0`.
pub fn check_band(
    x: &Vector,
    y: &Vector,
    b: &RatioBand,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<ConditionReport> {
    b.require_positive()?;
    let mut r = check_pair(x, y, &b.as_pair(), s, tol)?;
    r.name = "band".into();
    Ok(r)
}

/// Pointwise sufficient conditions, tested at every positive-weight index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum PointwiseKind {
    /// `|f - g| <= r < |g|`; sufficient for the integrated ball condition
    /// only when the total weight is 1, which the check also enforces.
    Ball { r: f64 },
    /// `Re[(Gamma g - f)(conj f - conj(gamma) conj g)] >= 0`.
    Pair { pair: ScalarPair },
    /// `m <= f / g <= M` for real `f`, `g`.
    Band { band: RatioBand },
    /// `M Re g >= Re f >= m Re g` and `M Im g >= Im f >= m Im g`.
    Components { band: RatioBand },
}

pub fn check_pointwise(
    f: &Vector,
    g: &Vector,
    kind: PointwiseKind,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<ConditionReport> {
    s.check_member(f)?;
    s.check_member(g)?;
    let pts: Vec<(Scalar, Scalar)> = s
        .support()
        .map(|k| (f.coords()[k], g.coords()[k]))
        .collect();
    let magnitude = pts
        .iter()
        .fold(0.0_f64, |acc, (a, b)| acc.max(a.norm()).max(b.norm()));

    let (name, residual, scale, mut detail) = match kind {
        PointwiseKind::Ball { r } => {
            if !(r.is_finite() && r > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "radius must be positive, got {r}"
                )));
            }
            let residual = pts
                .iter()
                .map(|(fk, gk)| (r - (fk - gk).norm()).min(gk.norm() - r))
                .fold(f64::INFINITY, f64::min);
            (
                "pointwise_ball",
                residual,
                scale_of(&[r, magnitude]),
                String::new(),
            )
        }
        PointwiseKind::Pair { pair } => {
            let mut scale = 1.0_f64;
            let residual = pts
                .iter()
                .map(|&(fk, gk)| {
                    let left = pair.upper * gk - fk;
                    let right = (fk - pair.lower * gk).conj();
                    scale = scale.max(left.norm() * right.norm());
                    (left * right).re
                })
                .fold(f64::INFINITY, f64::min);
            ("pointwise_pair", residual, scale, String::new())
        }
        PointwiseKind::Band { band } => {
            let ratios = real_ratios(f, g, s)?;
            let residual = ratios
                .iter()
                .map(|q| (q - band.m).min(band.big_m - q))
                .fold(f64::INFINITY, f64::min);
            let scale = ratios
                .iter()
                .fold(scale_of(&[band.m, band.big_m]), |acc, q| acc.max(q.abs()));
            ("pointwise_band", residual, scale, String::new())
        }
        PointwiseKind::Components { band } => {
            let residual = pts
                .iter()
                .map(|(fk, gk)| {
                    let re = (band.big_m * gk.re - fk.re).min(fk.re - band.m * gk.re);
                    let im = (band.big_m * gk.im - fk.im).min(fk.im - band.m * gk.im);
                    re.min(im)
                })
                .fold(f64::INFINITY, f64::min);
            let scale = scale_of(&[band.big_m * magnitude, magnitude]);
            ("pointwise_components", residual, scale, String::new())
        }
    };
    detail.push_str(&format!("min pointwise margin = {residual:e}"));
    let mut report = ConditionReport::graded(name, residual, scale, tol, detail);

    if let PointwiseKind::Ball { r } = kind {
        let dominance = pts
            .iter()
            .map(|(_, gk)| gk.norm() - r)
            .fold(f64::INFINITY, f64::min);
        if dominance <= tol.tol * scale {
            report.satisfied = false;
            report.detail.push_str("; strict dominance failed");
        }
        let total = s.total_weight();
        let normalized = (total - 1.0).abs() <= tol.tol * total.max(1.0);
        if !normalized {
            report.satisfied = false;
            report.detail.push_str(&format!(
                "; total weight {total:e} is not 1, sufficiency not established"
            ));
        }
    }
    Ok(report)
}

/// `f_k / g_k` over the support; both vectors must be real and `g` nonzero there.
fn real_ratios(f: &Vector, g: &Vector, s: &WeightedSpace) -> Result<Vec<f64>> {
    if !f.is_real() || !g.is_real() {
        return Err(Error::Domain("ratio band needs real-valued data".into()));
    }
    s.support()
        .map(|k| {
            let gk = g.coords()[k].re;
            if gk == 0.0 {
                Err(Error::Domain(format!(
                    "g vanishes at positive-weight index {k}"
                )))
            } else {
                Ok(f.coords()[k].re / gk)
            }
        })
        .collect()
}

/// Tightest band `[min f/g, max f/g]` over the support, for non-negative real
/// `f` and `g` with `g > 0` wherever the weight is positive.
pub fn extract_band(f: &Vector, g: &Vector, s: &WeightedSpace) -> Result<RatioBand> {
    s.check_member(f)?;
    s.check_member(g)?;
    if !f.is_real() || !g.is_real() {
        return Err(Error::Domain(
            "band extraction needs real-valued data".into(),
        ));
    }
    for k in s.support() {
        let (fk, gk) = (f.coords()[k].re, g.coords()[k].re);
        if fk < 0.0 || gk < 0.0 {
            return Err(Error::Domain(format!("negative entry at index {k}")));
        }
    }
    let ratios = real_ratios(f, g, s)?;
    let m = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let big_m = ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !m.is_finite() {
        return Err(Error::Domain("empty support".into()));
    }
    RatioBand::new(m, big_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rv(v: &[f64]) -> Vector {
        Vector::from_real(v).unwrap()
    }

    fn space(w: &[f64]) -> WeightedSpace {
        WeightedSpace::new(w.to_vec()).unwrap()
    }

    const T: Tolerance = Tolerance {
        tol: 1e-9,
        eq_tol: 1e-7,
    };

    #[test]
    fn ball_examples() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let r = check_ball(&rv(&[0.64, 0.48]), &a, 0.6, true, &s, T).unwrap();
        assert!(r.satisfied && r.boundary);
        assert!(r.residual.abs() < 1e-15);

        assert!(check_ball(&a, &a, 0.5, true, &s, T).unwrap().satisfied);

        let h = 0.8660254038;
        let r = check_ball(&rv(&[1.0, h]), &a, h, true, &s, T).unwrap();
        assert!(r.satisfied && r.boundary);
    }

    #[test]
    fn ball_strict_dominance() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let r = check_ball(&a, &a, 1.5, true, &s, T).unwrap();
        assert!(!r.satisfied);
        assert!(r.detail.contains("strict dominance failed"));
        // Equality r = ||a|| is excluded.
        assert!(!check_ball(&a, &a, 1.0, true, &s, T).unwrap().satisfied);
        assert!(check_ball(&a, &a, 1.5, false, &s, T).unwrap().satisfied);
        assert!(check_ball(&a, &a, 0.0, false, &s, T).is_err());
        assert!(check_ball(&a, &rv(&[1.0]), 0.5, false, &s, T).is_err());
    }

    #[test]
    fn pair_examples() {
        let p = ScalarPair::real(1.0, 4.0).unwrap();
        let s = space(&[1.0, 1.0]);
        let (x, y) = (rv(&[1.0, 2.0]), rv(&[1.0, 1.0]));
        let q = check_pair_quadratic(&x, &y, &p, &s, T).unwrap();
        assert!(q.satisfied);
        assert!((q.residual - 2.0).abs() < 1e-15);
        let b = check_pair_ball(&x, &y, &p, &s, T).unwrap();
        assert!(b.satisfied);
        assert!((b.residual - (1.5 * 2f64.sqrt() - 2.5f64.sqrt())).abs() < 1e-15);

        let q = check_pair_quadratic(&y, &y, &p, &s, T).unwrap();
        assert!(q.satisfied && q.residual == 0.0);

        let centered = y.scaled(p.center());
        let b = check_pair_ball(&centered, &y, &p, &s, T).unwrap();
        assert!((b.residual - 1.5 * 2f64.sqrt()).abs() < 1e-15);

        let s = space(&[2.0, 1.0]);
        let x = rv(&[1.0, 4.0]);
        let q = check_pair_quadratic(&x, &y, &p, &s, T).unwrap();
        assert!(q.satisfied && q.residual == 0.0);
        let b = check_pair_ball(&x, &y, &p, &s, T).unwrap();
        assert!(b.satisfied && b.boundary);
        assert!(check_pair(&x, &y, &p, &s, T).unwrap().satisfied);
    }

    #[test]
    fn band_examples() {
        let s = space(&[2.0, 1.0]);
        let y = rv(&[1.0, 1.0]);
        let b = RatioBand::positive(1.0, 4.0).unwrap();
        let r = check_band(&rv(&[1.0, 4.0]), &y, &b, &s, T).unwrap();
        assert!(r.satisfied && r.residual == 0.0);
        let s = space(&[1.0, 1.0]);
        let b = RatioBand::positive(1.0, 2.0).unwrap();
        let r = check_band(&rv(&[1.0, 2.0]), &y, &b, &s, T).unwrap();
        assert!(r.satisfied && r.residual == 0.0);
        assert!(check_band(&y, &y, &b, &s, T).unwrap().satisfied);
        let zero_floor = RatioBand::new(0.0, 2.0).unwrap();
        assert!(check_band(&y, &y, &zero_floor, &s, T).is_err());
    }

    #[test]
    fn invalid_bands_and_pairs() {
        assert!(RatioBand::new(2.0, 1.0).is_err());
        assert!(RatioBand::new(-1.0, 1.0).is_err());
        assert!(RatioBand::positive(0.0, 1.0).is_err());
        let p = ScalarPair::new(Scalar::new(1.0, 0.0), Scalar::new(-1.0, 0.0)).unwrap();
        assert!(!p.positive_real_product());
        assert!(!p.nondegenerate_sum());
        let p = ScalarPair::new(Scalar::new(1.0, 0.0), Scalar::new(0.0, 1.0)).unwrap();
        assert!(!p.positive_real_product());
        assert!(p.nondegenerate_sum());
    }

    #[test]
    fn km_coefficients() {
        let b = RatioBand::positive(1.0, 2.0).unwrap();
        let direct = (2f64.sqrt() - 1.0).powi(2);
        assert!((b.km_coefficient() - direct).abs() < 1e-16);
        assert!((b.as_pair().km_coefficient() - direct).abs() < 1e-16);
        let b = RatioBand::positive(1.0, 4.0).unwrap();
        assert_eq!(b.km_coefficient(), 1.0);
        assert_eq!(RatioBand::positive(3.0, 3.0).unwrap().km_coefficient(), 0.0);
    }

    #[test]
    fn pointwise_examples() {
        let s = space(&[1.0, 1.0]);
        let b = RatioBand::new(1.0, 2.0).unwrap();
        let g = rv(&[1.0, 1.0]);
        let r =
            check_pointwise(&rv(&[1.0, 2.0]), &g, PointwiseKind::Band { band: b }, &s, T).unwrap();
        assert!(r.satisfied && r.residual == 0.0);
        let one = RatioBand::new(1.0, 1.0).unwrap();
        let f = rv(&[0.3, 7.0]);
        assert!(
            check_pointwise(&f, &f, PointwiseKind::Band { band: one }, &s, T)
                .unwrap()
                .satisfied
        );

        let s = space(&[0.5, 0.5]);
        let b = RatioBand::new(1.25, 1.75).unwrap();
        let r = check_pointwise(
            &rv(&[1.25, 1.75]),
            &g,
            PointwiseKind::Band { band: b },
            &s,
            T,
        )
        .unwrap();
        assert!(r.satisfied && r.residual == 0.0);

        let r = check_pointwise(
            &rv(&[1.25, 1.75]),
            &g,
            PointwiseKind::Components { band: b },
            &s,
            T,
        )
        .unwrap();
        assert!(r.satisfied);
        let p = b.as_pair();
        assert!(
            check_pointwise(
                &rv(&[1.25, 1.75]),
                &g,
                PointwiseKind::Pair { pair: p },
                &s,
                T
            )
            .unwrap()
            .satisfied
        );
        assert!(
            !check_pointwise(
                &rv(&[1.0, 1.75]),
                &g,
                PointwiseKind::Pair { pair: p },
                &s,
                T
            )
            .unwrap()
            .satisfied
        );
    }

    #[test]
    fn pointwise_ball_needs_normalized_weights() {
        let f = rv(&[1.1, 0.9]);
        let g = rv(&[1.0, 1.0]);
        let kind = PointwiseKind::Ball { r: 0.2 };
        assert!(
            check_pointwise(&f, &g, kind, &space(&[0.5, 0.5]), T)
                .unwrap()
                .satisfied
        );
        let r = check_pointwise(&f, &g, kind, &space(&[1.0, 1.0]), T).unwrap();
        assert!(!r.satisfied);
        assert!(r.detail.contains("not 1"));
        // r must stay below |g|
        assert!(
            !check_pointwise(
                &f,
                &g,
                PointwiseKind::Ball { r: 1.0 },
                &space(&[0.5, 0.5]),
                T
            )
            .unwrap()
            .satisfied
        );
    }

    #[test]
    fn pointwise_band_rejects_zero_denominator_on_support() {
        let g = rv(&[0.0, 1.0]);
        let f = rv(&[1.0, 1.0]);
        let b = RatioBand::new(1.0, 1.0).unwrap();
        assert!(check_pointwise(
            &f,
            &g,
            PointwiseKind::Band { band: b },
            &space(&[1.0, 1.0]),
            T
        )
        .is_err());
        // zero-weight index is excluded
        assert!(
            check_pointwise(
                &f,
                &g,
                PointwiseKind::Band { band: b },
                &space(&[0.0, 1.0]),
                T
            )
            .unwrap()
            .satisfied
        );
    }

    #[test]
    fn extract_band_examples() {
        let s = space(&[1.0, 1.0]);
        let g = rv(&[1.0, 1.0]);
        assert_eq!(
            extract_band(&rv(&[1.0, 2.0]), &g, &s).unwrap(),
            RatioBand { m: 1.0, big_m: 2.0 }
        );
        let g2 = rv(&[0.5, 3.0]);
        let b = extract_band(&g2.scaled(real(2.5)), &g2, &s).unwrap();
        assert_eq!((b.m, b.big_m), (2.5, 2.5));
        let s = space(&[0.5, 0.5]);
        assert_eq!(
            extract_band(&rv(&[1.25, 1.75]), &g, &s).unwrap(),
            RatioBand {
                m: 1.25,
                big_m: 1.75
            }
        );
        assert!(extract_band(&rv(&[-1.0, 1.0]), &g, &s).is_err());
        assert!(extract_band(&rv(&[1.0, 1.0]), &rv(&[0.0, 1.0]), &s).is_err());
        let c = Vector::new(vec![Scalar::new(1.0, 1.0), real(1.0)]).unwrap();
        assert!(extract_band(&c, &g, &s).is_err());
    }

    fn cvec(n: usize) -> impl Strategy<Value = Vector> {
        prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), n).prop_map(|c| {
            Vector::new(c.into_iter().map(|(a, b)| Scalar::new(a, b)).collect()).unwrap()
        })
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        (-4.0..4.0f64, -4.0..4.0f64).prop_map(|(a, b)| Scalar::new(a, b))
    }

    proptest! {
        #[test]
        fn pair_forms_are_the_same_identity(
            (w, x, y) in (1usize..7).prop_flat_map(|n| (
                prop::collection::vec(0.1..3.0f64, n), cvec(n), cvec(n))),
            lo in scalar(), hi in scalar(),
        ) {
            let s = WeightedSpace::new(w).unwrap();
            let p = ScalarPair::new(lo, hi).unwrap();
            let q = check_pair_quadratic(&x, &y, &p, &s, T).unwrap();
            let b = check_pair_ball(&x, &y, &p, &s, T).unwrap();
            let radius = p.half_width() * s.norm(&y).unwrap();
            let offset = radius - b.residual;
            let identity = q.residual - (radius * radius - offset * offset);
            let scale = scale_of(&[q.scale, radius * radius, offset * offset]);
            prop_assert!(identity.abs() <= 1e-12 * scale);
            if q.residual.abs() > T.tol * scale {
                prop_assert_eq!(q.satisfied, b.satisfied);
            }
        }

        #[test]
        fn pointwise_band_implies_integrated_band(
            (w, g, ratio) in (1usize..7).prop_flat_map(|n| (
                prop::collection::vec(0.0..2.0f64, n).prop_map(|mut w| { w[0] += 0.1; w }),
                prop::collection::vec(0.1..3.0f64, n),
                prop::collection::vec(0.0..1.0f64, n))),
            m in 0.1..2.0f64, width in 0.0..3.0f64,
        ) {
            let s = WeightedSpace::new(w).unwrap();
            let b = RatioBand::positive(m, m + width).unwrap();
            let f: Vec<f64> = g.iter().zip(&ratio).map(|(gk, t)| gk * (m + t * width)).collect();
            let (f, g) = (rv(&f), rv(&g));
            let pw = check_pointwise(&f, &g, PointwiseKind::Band { band: b }, &s, T).unwrap();
            prop_assert!(pw.satisfied);
            prop_assert!(check_band(&f, &g, &b, &s, T).unwrap().satisfied);
        }

        #[test]
        fn extracted_band_is_tightest(
            (w, f, g) in (1usize..7).prop_flat_map(|n| (
                prop::collection::vec(0.0..2.0f64, n).prop_map(|mut w| { w[0] += 0.1; w }),
                prop::collection::vec(0.0..5.0f64, n),
                prop::collection::vec(0.1..3.0f64, n))),
            delta in 1e-9..1.0f64,
        ) {
            let s = WeightedSpace::new(w).unwrap();
            let (f, g) = (rv(&f), rv(&g));
            let b = extract_band(&f, &g, &s).unwrap();
            let exact = Tolerance::exact();
            let inside = |band| check_pointwise(&f, &g, PointwiseKind::Band { band }, &s, exact).unwrap().satisfied;
            prop_assert!(inside(b));
            let raised = RatioBand { m: b.m + delta, big_m: b.big_m.max(b.m + delta) };
            prop_assert!(!inside(raised));
            let lowered = RatioBand { m: (b.big_m - delta).min(b.m), big_m: b.big_m - delta };
            prop_assert!(!inside(lowered));
        }
    }
}
