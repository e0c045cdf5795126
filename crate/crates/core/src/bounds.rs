//! Evaluators for the reverse Schwarz inequalities over an abstract weighted
//! inner-product space.
//!
//! Each evaluator checks its hypotheses, then returns a [`BoundReport`] with
//! both sides of the inequality. A failed hypothesis is reported in the
//! `failure` field rather than raised; only malformed arguments (dimension
//! mismatch, non-positive radius, invalid band) produce an `Err`.
//!
//! Two numerical conventions run through the module. The Schwarz gap
//! `||x||^2 ||y||^2 - |<x, y>|^2` is always taken from
//! [`WeightedSpace::schwarz_gap`], and differences of the form
//! `|Gamma + gamma| - 2 sqrt(Re(Gamma conj(gamma)))` or
//! `||a|| - sqrt(||a||^2 - r^2)` are rewritten as quotients so that nothing
//! cancels.

use serde::{Deserialize, Serialize};

use crate::conditions::{ball_parts, check_band, check_pair, RatioBand, ScalarPair};
use crate::error::Result;
use crate::report::{BoundReport, Draft, FailureReason, TheoremId};
use crate::space::{sgn, Scalar, Vector, WeightedSpace};
use crate::tolerance::{scale_of, Tolerance, DENOMINATOR_FLOOR};

/// Norms and inner product of a pair of vectors.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Gram {
    pub xx: f64,
    pub yy: f64,
    pub ip: Scalar,
    pub gap: f64,
}

impl Gram {
    pub fn new(x: &Vector, y: &Vector, s: &WeightedSpace) -> Result<Gram> {
        Ok(Gram {
            xx: s.norm_sq(x)?,
            yy: s.norm_sq(y)?,
            ip: s.inner(x, y)?,
            gap: s.schwarz_gap(x, y)?,
        })
    }

    /// `||x||^2 ||y||^2 - [Re<x, y>]^2`.
    pub fn real_gap(&self) -> f64 {
        self.gap + self.ip.im * self.ip.im
    }
}

/// `2 r^2 / (||a|| (||a|| + sqrt(||a||^2 - r^2)))`, the right side of the
/// abstract Klamkin-McLenaghan bound. Requires `0 < r < ||a||`.
pub fn km_ball_rhs(norm_a: f64, r: f64) -> f64 {
    km_ball_rhs_from_square(norm_a, r * r, (norm_a - r) * (norm_a + r))
}

pub(crate) fn km_ball_rhs_from_square(norm_a: f64, r_sq: f64, deficit: f64) -> f64 {
    2.0 * r_sq / (norm_a * (norm_a + deficit.sqrt()))
}

fn close(a: f64, b: f64, tol: Tolerance, extra: &[f64]) -> bool {
    let mut terms = vec![a, b];
    terms.extend_from_slice(extra);
    tol.is_tight(a - b, scale_of(&terms))
}

/// Records the ball hypothesis; returns the failure reason if it does not hold.
fn require_ball(
    d: &mut Draft,
    x: &Vector,
    a: &Vector,
    r: f64,
    strict: bool,
    s: &WeightedSpace,
) -> Result<std::result::Result<(f64, f64), FailureReason>> {
    let parts = ball_parts(x, a, r, strict, s, d.tol())?;
    let (distance, norm_a, dominance_failed) =
        (parts.distance, parts.norm_a, parts.dominance_failed);
    if d.check(parts.report) {
        Ok(Ok((distance, norm_a)))
    } else if dominance_failed {
        Ok(Err(FailureReason::StrictDominance))
    } else {
        Ok(Err(FailureReason::BallCondition))
    }
}

fn require_positive_product(d: &mut Draft, p: &ScalarPair) -> bool {
    let prod = p.real_product();
    d.check_flag(
        "positive_real_product",
        p.positive_real_product(),
        prod,
        format!("Re(Gamma conj(gamma)) = {prod:e}"),
    )
}

fn require_nonzero(d: &mut Draft, name: &str, value: f64) -> bool {
    d.check_flag(
        name,
        value.abs() > DENOMINATOR_FLOOR,
        value.abs(),
        format!("|{name}| = {:e}", value.abs()),
    )
}

macro_rules! try_ball {
    ($d:ident, $x:expr, $a:expr, $r:expr, $strict:expr, $s:expr) => {
        match require_ball(&mut $d, $x, $a, $r, $strict, $s)? {
            Ok(v) => v,
            Err(reason) => return Ok($d.fail(reason)),
        }
    };
}

/// `||x|| (||a||^2 - r^2)^(1/2) <= Re<x, a>` under `||x - a|| <= r < ||a||`.
///
/// The equivalent squared form `||x||^2 ||a||^2 - [Re<x, a>]^2 <= r^2 ||x||^2`
/// is attached as the companion `"squared"`.
pub fn thm_premultiplicative(
    x: &Vector,
    a: &Vector,
    r: f64,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::ThmPremultiplicative, tol);
    let (distance, norm_a) = try_ball!(d, x, a, r, true, s);
    let g = Gram::new(x, a, s)?;
    let norm_x = g.xx.sqrt();
    let lhs = norm_x * ((norm_a - r) * (norm_a + r)).sqrt();
    let rhs = g.ip.re;

    d.companion("squared", g.real_gap(), r * r * g.xx, &[g.xx * g.yy]);
    d.equality_conditions(
        close(distance, r, tol, &[norm_a]) && close(g.xx + r * r, g.yy, tol, &[]),
    );
    Ok(d.finish(lhs, rhs, &[norm_x * norm_a]))
}

/// `||x|| ||y|| <= Re[conj(Gamma + gamma) <x, y>] / (2 sqrt(Re(Gamma conj(gamma))))`
/// under the pair condition. The weaker chained bound
/// `|Gamma + gamma| |<x, y>| / sqrt(Re(Gamma conj(gamma)))` is the companion
/// `"chained"`.
pub fn cor_pair_multiplicative(
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::CorPairMultiplicative, tol);
    if !require_positive_product(&mut d, p) {
        return Ok(d.fail(FailureReason::NonPositiveRealProduct));
    }
    let cond = check_pair(x, y, p, s, tol)?;
    let tight = cond.is_tight(tol);
    if !d.check(cond) {
        return Ok(d.fail(FailureReason::PairCondition));
    }
    let g = Gram::new(x, y, s)?;
    let root = p.real_product().sqrt();
    let sum = p.upper + p.lower;
    let (norm_x, norm_y) = (g.xx.sqrt(), g.yy.sqrt());
    let lhs = norm_x * norm_y;
    let rhs = (sum.conj() * g.ip).re / (2.0 * root);

    d.companion("chained", rhs, sum.norm() * g.ip.norm() / root, &[]);
    d.equality_conditions(tight && close(norm_x, root * norm_y, tol, &[]));
    Ok(d.finish(lhs, rhs, &[]))
}

/// `||x|| ||a|| - Re<x, a> <= r^2 / 2` under `||x - a|| <= r`.
pub fn thm_additive(
    x: &Vector,
    a: &Vector,
    r: f64,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::ThmAdditive, tol);
    let (distance, norm_a) = try_ball!(d, x, a, r, false, s);
    let g = Gram::new(x, a, s)?;
    let norm_x = g.xx.sqrt();
    let product = norm_x * norm_a;
    let lhs = schwarz_defect(product, g.ip.re, g.real_gap());
    let rhs = 0.5 * r * r;

    d.equality_conditions(close(distance, r, tol, &[]) && close(norm_x, norm_a, tol, &[]));
    Ok(d.finish(lhs, rhs, &[product]))
}

/// `p - v` for `p = ||x|| ||y||` and `v` a real part bounded by it, given
/// `p^2 - v^2` separately: when `v > 0` the quotient `(p^2 - v^2) / (p + v)`
/// avoids cancelling `p` against `v`.
fn schwarz_defect(product: f64, v: f64, squares_gap: f64) -> f64 {
    if v > 0.0 {
        squares_gap / (product + v)
    } else {
        product - v
    }
}

/// `||x|| ||y|| - Re[conj(Gamma + gamma) <x, y>] / |Gamma + gamma|
///  <= |Gamma - gamma|^2 ||y||^2 / (4 |Gamma + gamma|)` under the pair condition.
pub fn cor_pair_additive(
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::CorPairAdditive, tol);
    let sum = p.upper + p.lower;
    if !require_nonzero(&mut d, "Gamma + gamma", sum.norm()) {
        return Ok(d.fail(FailureReason::DegenerateSum));
    }
    let cond = check_pair(x, y, p, s, tol)?;
    let tight = cond.is_tight(tol);
    if !d.check(cond) {
        return Ok(d.fail(FailureReason::PairCondition));
    }
    let g = Gram::new(x, y, s)?;
    let (norm_x, norm_y) = (g.xx.sqrt(), g.yy.sqrt());
    let product = norm_x * norm_y;
    // sum is nonzero here, so sgn is defined
    let rotated = sgn(sum).unwrap_or(Scalar::new(1.0, 0.0)).conj() * g.ip;
    let lhs = schwarz_defect(product, rotated.re, g.gap + rotated.im * rotated.im);
    let diff = (p.upper - p.lower).norm();
    let rhs = 0.25 * diff * diff * g.yy / sum.norm();

    d.equality_conditions(tight && close(norm_x, 0.5 * sum.norm() * norm_y, tol, &[]));
    Ok(d.finish(lhs, rhs, &[product]))
}

/// `||x||^2 / |<x, a>| - |<x, a>| / ||a||^2 <= 2 r^2 / (||a|| (||a|| + sqrt(||a||^2 - r^2)))`
/// under `<x, a> != 0` and `||x - a|| <= r < ||a||`.
///
/// `equality` is decided from the slack; `equality_conditions` reports the
/// characterization `||x - a|| = r`, `Re<x, a> = |<x, a>| = ||a|| (||a||^2 - r^2)^(1/2)`.
pub fn thm_km_abstract(
    x: &Vector,
    a: &Vector,
    r: f64,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::ThmKmAbstract, tol);
    let (distance, norm_a) = try_ball!(d, x, a, r, true, s);
    let g = Gram::new(x, a, s)?;
    let modulus = g.ip.norm();
    if !require_nonzero(&mut d, "<x, a>", modulus) {
        return Ok(d.fail(FailureReason::VanishingInnerProduct));
    }
    let lhs = g.gap / (modulus * g.yy);
    let rhs = km_ball_rhs(norm_a, r);
    let target = norm_a * ((norm_a - r) * (norm_a + r)).sqrt();

    d.equality_conditions(
        close(distance, r, tol, &[norm_a])
            && close(g.ip.re, modulus, tol, &[])
            && close(modulus, target, tol, &[]),
    );
    Ok(d.finish(lhs, rhs, &[g.xx / modulus, modulus / g.yy]))
}

/// Real-part variant: `||x||^2 / |Re<x, a>| - |Re<x, a>| / ||a||^2` against the
/// same right side, under `Re<x, a> != 0` and the strict ball condition.
pub fn thm_km_abstract_re(
    x: &Vector,
    a: &Vector,
    r: f64,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::ThmKmAbstractRe, tol);
    let (distance, norm_a) = try_ball!(d, x, a, r, true, s);
    let g = Gram::new(x, a, s)?;
    let re = g.ip.re;
    if !require_nonzero(&mut d, "Re<x, a>", re) {
        return Ok(d.fail(FailureReason::VanishingRealPart));
    }
    let lhs = g.real_gap() / (re.abs() * g.yy);
    let rhs = km_ball_rhs(norm_a, r);
    let target = norm_a * ((norm_a - r) * (norm_a + r)).sqrt();

    d.equality_conditions(close(distance, r, tol, &[norm_a]) && close(re, target, tol, &[]));
    Ok(d.finish(lhs, rhs, &[g.xx / re.abs(), re.abs() / g.yy]))
}

/// The two multiplied-out forms of the abstract bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadraticForms {
    /// `||x||^2 ||a||^2 - |<x, a>|^2 <= K ||a||^2 |<x, a>|`.
    pub modulus_form: BoundReport,
    /// `||x||^2 ||a||^2 - [Re<x, a>]^2 <= K ||a||^2 |Re<x, a>|`.
    pub real_part_form: BoundReport,
    /// `[Re<x, a>]^2 <= |<x, a>|^2`; `None` when the ball condition failed.
    pub real_part_dominated: Option<bool>,
}

/// Both multiplied-out forms, with `K = 2 r^2 / (||a|| (||a|| + sqrt(||a||^2 - r^2)))`.
pub fn km_quadratic_forms(
    x: &Vector,
    a: &Vector,
    r: f64,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<QuadraticForms> {
    let mut first = Draft::new(TheoremId::KmQuadraticForm, tol);
    let mut second = Draft::new(TheoremId::KmQuadraticFormRe, tol);
    let ball = match require_ball(&mut first, x, a, r, true, s)? {
        Ok(v) => {
            require_ball(&mut second, x, a, r, true, s)?.ok();
            v
        }
        Err(reason) => {
            require_ball(&mut second, x, a, r, true, s)?.ok();
            return Ok(QuadraticForms {
                modulus_form: first.fail(reason),
                real_part_form: second.fail(reason),
                real_part_dominated: None,
            });
        }
    };
    let (distance, norm_a) = ball;
    let g = Gram::new(x, a, s)?;
    let coeff = km_ball_rhs(norm_a, r) * g.yy;
    let modulus = g.ip.norm();
    let re = g.ip.re;
    let target = norm_a * ((norm_a - r) * (norm_a + r)).sqrt();
    let on_sphere = close(distance, r, tol, &[norm_a]);
    let extra = [g.xx * g.yy];

    first.equality_conditions(
        on_sphere && close(re, modulus, tol, &[]) && close(modulus, target, tol, &[]),
    );
    second.equality_conditions(on_sphere && close(re, target, tol, &[]));
    Ok(QuadraticForms {
        modulus_form: first.finish(g.gap, coeff * modulus, &extra),
        real_part_form: second.finish(g.real_gap(), coeff * re.abs(), &extra),
        real_part_dominated: Some(re * re <= g.ip.norm_sqr()),
    })
}

/// Shared body of the pair and band forms of the Klamkin-McLenaghan bound:
/// `||x||^2 / |<x, y>| - |<x, y>| / ||y||^2 <= coefficient`.
fn km_pair_form(
    mut d: Draft,
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    coefficient: f64,
) -> Result<BoundReport> {
    let tol = d.tol();
    let g = Gram::new(x, y, s)?;
    let modulus = g.ip.norm();
    if !require_nonzero(&mut d, "<x, y>", modulus) {
        return Ok(d.fail(FailureReason::VanishingInnerProduct));
    }
    let cond = check_pair(x, y, p, s, tol)?;
    let tight = cond.is_tight(tol);
    if !d.check(cond) {
        return Ok(d.fail(FailureReason::PairCondition));
    }
    let sum = p.upper + p.lower;
    let root = p.real_product().sqrt();
    let aligned = (sum.conj() * g.ip).re;
    d.equality_conditions(
        tight
            && close(aligned, sum.norm() * modulus, tol, &[])
            && close(modulus, root * g.yy, tol, &[]),
    );
    let lhs = g.gap / (modulus * g.yy);
    Ok(d.finish(lhs, coefficient, &[g.xx / modulus, modulus / g.yy]))
}

/// `||x||^2 / |<x, y>| - |<x, y>| / ||y||^2 <= |Gamma + gamma| - 2 sqrt(Re(Gamma conj(gamma)))`
/// under `<x, y> != 0`, `Re(Gamma conj(gamma)) > 0` and the pair condition.
pub fn cor_km_pair(
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::CorKmPair, tol);
    if !require_positive_product(&mut d, p) {
        return Ok(d.fail(FailureReason::NonPositiveRealProduct));
    }
    km_pair_form(d, x, y, p, s, p.km_coefficient())
}

fn require_band_floor(d: &mut Draft, b: &RatioBand) -> bool {
    d.check_flag(
        "band_floor",
        b.m > 0.0,
        b.m,
        format!("m = {:e}, M = {:e}", b.m, b.big_m),
    )
}

/// `||x||^2 / |<x, y>| - |<x, y>| / ||y||^2 <= (sqrt(M) - sqrt(m))^2` under
/// `Re<M y - x, x - m y> >= 0`, `0 < m <= M` and `<x, y> != 0`.
///
/// Computes exactly what [`cor_km_pair`] computes for `gamma = m`, `Gamma = M`.
pub fn km_band(
    x: &Vector,
    y: &Vector,
    b: &RatioBand,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::KmBand, tol);
    if !require_band_floor(&mut d, b) {
        return Ok(d.fail(FailureReason::NonPositiveBandFloor));
    }
    let p = b.as_pair();
    km_pair_form(d, x, y, &p, s, p.km_coefficient())
}

/// The chain
///
/// ```text
/// ||x||^2 ||y||^2 - |<x,y>|^2  <=  ||x||^2 ||y||^2 - u^2
///                              <=  K |u| ||y||^2
///                              <=  K |<x,y>| ||y||^2
/// ```
///
/// with `u = Re[conj(sgn(Gamma + gamma)) <x, y>]` and
/// `K = |Gamma + gamma| - 2 sqrt(Re(Gamma conj(gamma)))`. The middle link is
/// the reported inequality; the outer links are companions `"link_modulus"`
/// and `"link_weakened"`.
pub fn prop_sgn_chain(
    x: &Vector,
    y: &Vector,
    p: &ScalarPair,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::PropSgnChain, tol);
    if !require_positive_product(&mut d, p) {
        return Ok(d.fail(FailureReason::NonPositiveRealProduct));
    }
    let cond = check_pair(x, y, p, s, tol)?;
    let tight = cond.is_tight(tol);
    if !d.check(cond) {
        return Ok(d.fail(FailureReason::PairCondition));
    }
    let g = Gram::new(x, y, s)?;
    let phase = sgn(p.upper + p.lower).unwrap_or(Scalar::new(1.0, 0.0));
    let rotated = phase.conj() * g.ip;
    let u = rotated.re;
    let k = p.km_coefficient();
    let middle = g.gap + rotated.im * rotated.im;
    let rhs = k * u.abs() * g.yy;
    let extra = [g.xx * g.yy];

    d.companion("link_modulus", g.gap, middle, &extra);
    d.companion("link_weakened", rhs, k * g.ip.norm() * g.yy, &extra);
    d.equality_conditions(tight && close(u, p.real_product().sqrt() * g.yy, tol, &[]));
    Ok(d.finish(middle, rhs, &extra))
}

/// `||x||^2 / |Re<x, y>| - |Re<x, y>| / ||y||^2 <= (sqrt(M) - sqrt(m))^2`, with
/// the multiplied-out form
/// `||x||^2 ||y||^2 - [Re<x, y>]^2 <= (sqrt(M) - sqrt(m))^2 |Re<x, y>| ||y||^2`
/// as the companion `"multiplied"`.
pub fn km_band_re(
    x: &Vector,
    y: &Vector,
    b: &RatioBand,
    s: &WeightedSpace,
    tol: Tolerance,
) -> Result<BoundReport> {
    let mut d = Draft::new(TheoremId::KmBandRe, tol);
    if !require_band_floor(&mut d, b) {
        return Ok(d.fail(FailureReason::NonPositiveBandFloor));
    }
    let cond = check_band(x, y, b, s, tol)?;
    let tight = cond.is_tight(tol);
    if !d.check(cond) {
        return Ok(d.fail(FailureReason::BandCondition));
    }
    let g = Gram::new(x, y, s)?;
    let re = g.ip.re;
    if !require_nonzero(&mut d, "Re<x, y>", re) {
        return Ok(d.fail(FailureReason::VanishingRealPart));
    }
    let k = b.km_coefficient();
    let real_gap = g.real_gap();
    d.companion("multiplied", real_gap, k * re.abs() * g.yy, &[g.xx * g.yy]);
    d.equality_conditions(tight && close(re, (b.m * b.big_m).sqrt() * g.yy, tol, &[]));
    Ok(d.finish(
        real_gap / (re.abs() * g.yy),
        k,
        &[g.xx / re.abs(), re.abs() / g.yy],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::real;

    const T: Tolerance = Tolerance {
        tol: 1e-9,
        eq_tol: 1e-7,
    };

    fn rv(v: &[f64]) -> Vector {
        Vector::from_real(v).unwrap()
    }

    fn space(w: &[f64]) -> WeightedSpace {
        WeightedSpace::new(w.to_vec()).unwrap()
    }

    fn sides(r: &BoundReport) -> (f64, f64) {
        (r.lhs.unwrap(), r.rhs.unwrap())
    }

    fn near(a: f64, b: f64, eps: f64) -> bool {
        (a - b).abs() <= eps
    }

    #[test]
    fn premultiplicative_examples() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let r = thm_premultiplicative(&rv(&[0.64, 0.48]), &a, 0.6, &s, T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 0.64, 1e-15) && near(h, 0.64, 1e-15));
        assert!(r.equality && r.equality_conditions == Some(true));
        assert!(r.companion("squared").unwrap().holds);

        let r = thm_premultiplicative(&a, &a, 0.5, &s, T).unwrap();
        assert!(near(r.lhs.unwrap(), 0.75f64.sqrt(), 1e-15));
        assert_eq!(r.rhs, Some(1.0));
        assert!(r.holds.unwrap() && !r.equality);

        let r = thm_premultiplicative(&rv(&[1.0, 0.866025]), &a, 0.866026, &s, T).unwrap();
        let expected =
            (1.0f64 + 0.866025 * 0.866025).sqrt() * (1.0f64 - 0.866026 * 0.866026).sqrt();
        assert!(near(r.lhs.unwrap(), expected, 1e-15));
        assert!(near(r.lhs.unwrap(), 0.6614, 1e-4));
        assert!(r.holds.unwrap());
    }

    #[test]
    fn strict_dominance_failure_is_reported() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let r = thm_km_abstract(&a, &a, 1.2, &s, T).unwrap();
        assert_eq!(r.failure, Some(FailureReason::StrictDominance));
        assert_eq!(r.holds, None);
        let r = thm_premultiplicative(&rv(&[3.0, 0.0]), &a, 0.5, &s, T).unwrap();
        assert_eq!(r.failure, Some(FailureReason::BallCondition));
    }

    #[test]
    fn pair_multiplicative_examples() {
        let p = ScalarPair::real(1.0, 4.0).unwrap();
        let y = rv(&[1.0, 1.0]);
        let r = cor_pair_multiplicative(&rv(&[1.0, 4.0]), &y, &p, &space(&[2.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 54f64.sqrt(), 1e-14) && near(h, 7.5, 1e-15));
        assert!(!r.equality);
        assert!(r.companion("chained").unwrap().holds);

        let r = cor_pair_multiplicative(&rv(&[1.0, 2.0]), &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 10f64.sqrt(), 1e-14) && near(h, 3.75, 1e-15));

        // x = sqrt(mM) y with a band pair sits strictly inside the ball, so
        // equality requires the boundary as well
        let p = ScalarPair::real(1.0, 4.0).unwrap();
        let r =
            cor_pair_multiplicative(&y.scaled(real(2.0)), &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        assert!(r.holds.unwrap());
        assert_eq!(r.equality_conditions, Some(false));
        assert!(!r.equality);
    }

    #[test]
    fn pair_multiplicative_equality_on_the_boundary() {
        // x = (gamma, Gamma) . y with weights tuned so ||x|| = sqrt(Gamma gamma) ||y||
        let p = ScalarPair::real(1.0, 4.0).unwrap();
        let s = space(&[4.0, 1.0]);
        let x = rv(&[1.0, 4.0]);
        let y = rv(&[1.0, 1.0]);
        // ||x||^2 = 4 + 16 = 20, ||y||^2 = 5, ratio 4 = Gamma gamma
        let r = cor_pair_multiplicative(&x, &y, &p, &s, T).unwrap();
        assert!(r.equality, "{r:?}");
        assert_eq!(r.equality_conditions, Some(true));
    }

    #[test]
    fn additive_examples() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let x = rv(&[0.9, 0.19f64.sqrt()]);
        let r = thm_additive(&x, &a, 0.2f64.sqrt(), &s, T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 0.1, 1e-15) && near(h, 0.1, 1e-15));
        assert!(r.equality && r.equality_conditions == Some(true));

        let r = thm_additive(&a, &a, 3.0, &s, T).unwrap();
        assert_eq!(r.lhs, Some(0.0));
        assert!(r.holds.unwrap());

        let r = thm_additive(&rv(&[1.0, 0.3]), &a, 0.3, &s, T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 1.09f64.sqrt() - 1.0, 1e-15));
        assert!(near(l, 0.044031, 1e-6) && near(h, 0.045, 1e-15));
        assert!(!r.equality && r.equality_conditions == Some(false));
    }

    #[test]
    fn pair_additive_examples() {
        let p = ScalarPair::real(1.0, 4.0).unwrap();
        let y = rv(&[1.0, 1.0]);
        let r = cor_pair_additive(&rv(&[1.0, 4.0]), &y, &p, &space(&[2.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 54f64.sqrt() - 6.0, 1e-14) && near(h, 1.35, 1e-15));
        let r = cor_pair_additive(&rv(&[1.0, 2.0]), &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 10f64.sqrt() - 3.0, 1e-14) && near(h, 0.9, 1e-15));
        let r = cor_pair_additive(&y.scaled(p.center()), &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        assert!(r.lhs.unwrap().abs() < 1e-15);

        let bad = ScalarPair::real(1.0, -1.0).unwrap();
        let r = cor_pair_additive(&y, &y, &bad, &space(&[1.0, 1.0]), T).unwrap();
        assert_eq!(r.failure, Some(FailureReason::DegenerateSum));
    }

    #[test]
    fn km_abstract_examples() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let h = 0.75f64.sqrt();
        let r = thm_km_abstract(&rv(&[1.0, h]), &a, h, &s, T).unwrap();
        let (l, rr) = sides(&r);
        assert!(near(l, 0.75, 1e-15) && near(rr, 1.0, 1e-15));

        let r = thm_km_abstract(&a, &a, 0.5, &s, T).unwrap();
        assert_eq!(r.lhs, Some(0.0));
        assert!(r.rhs.unwrap() > 0.0);

        // (0.64, 0.48) is on the sphere but Re<x,a> = 0.64 is not ||a|| sqrt(1 - r^2) = 0.8
        let r = thm_km_abstract(&rv(&[0.64, 0.48]), &a, 0.6, &s, T).unwrap();
        let (l, rr) = sides(&r);
        assert!(near(l, 0.36, 1e-15) && near(rr, 0.4, 1e-15));
        assert!(!r.equality);
        assert_eq!(r.equality_conditions, Some(false));
    }

    #[test]
    fn km_abstract_equality_witness() {
        // x1 = sqrt(1 - r^2) = 0.8, (x1 - 1)^2 + x2^2 = r^2 = 0.36
        let s = space(&[1.0, 1.0]);
        let r = thm_km_abstract(&rv(&[0.8, 0.32f64.sqrt()]), &rv(&[1.0, 0.0]), 0.6, &s, T).unwrap();
        let (l, rr) = sides(&r);
        assert!(near(l, 0.4, 1e-15) && near(rr, 0.4, 1e-15));
        assert!(r.equality && r.equality_conditions == Some(true));
    }

    #[test]
    fn vanishing_inner_product_fails_precondition() {
        let s = space(&[1.0, 1.0]);
        let r = thm_km_abstract(&rv(&[0.0, 0.0]), &rv(&[0.0, 0.0]), 1.0, &s, T).unwrap();
        assert_eq!(r.failure, Some(FailureReason::StrictDominance));
        let r = cor_km_pair(
            &rv(&[1.0, -1.0]),
            &rv(&[1.0, 1.0]),
            &ScalarPair::real(1.0, 2.0).unwrap(),
            &s,
            T,
        )
        .unwrap();
        assert_eq!(r.failure, Some(FailureReason::VanishingInnerProduct));
    }

    #[test]
    fn km_abstract_re_examples() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let h = 0.75f64.sqrt();
        let x = rv(&[1.0, h]);
        let plain = thm_km_abstract(&x, &a, h, &s, T).unwrap();
        let re = thm_km_abstract_re(&x, &a, h, &s, T).unwrap();
        assert_eq!((plain.lhs, plain.rhs), (re.lhs, re.rhs));

        let xc = Vector::new(vec![real(1.0), Scalar::new(0.0, 0.8660254)]).unwrap();
        let ac = Vector::new(vec![real(1.0), real(0.0)]).unwrap();
        assert_eq!(s.inner(&xc, &ac).unwrap(), real(1.0));
        let r = thm_km_abstract_re(&xc, &ac, 0.8660254, &s, T).unwrap();
        assert!(near(r.lhs.unwrap(), 0.8660254f64.powi(2), 1e-15));
        assert!(r.holds.unwrap());
    }

    #[test]
    fn quadratic_forms_examples() {
        let s = space(&[1.0, 1.0]);
        let a = rv(&[1.0, 0.0]);
        let h = 0.75f64.sqrt();
        let q = km_quadratic_forms(&rv(&[1.0, h]), &a, h, &s, T).unwrap();
        let (l, rr) = sides(&q.modulus_form);
        assert!(near(l, 0.75, 1e-15) && near(rr, 1.0, 1e-15));
        assert_eq!(q.modulus_form.lhs, q.real_part_form.lhs);
        assert_eq!(q.modulus_form.rhs, q.real_part_form.rhs);
        assert_eq!(q.real_part_dominated, Some(true));

        // complex instance with Im<x, a> != 0
        let x = Vector::new(vec![Scalar::new(1.8, 0.5), Scalar::new(0.3, -0.2)]).unwrap();
        let a = rv(&[2.0, 0.0]);
        let q = km_quadratic_forms(&x, &a, 1.2, &s, T).unwrap();
        assert!(q.modulus_form.holds.unwrap() && q.real_part_form.holds.unwrap());
        assert!(q.real_part_form.lhs.unwrap() > q.modulus_form.lhs.unwrap());

        let q = km_quadratic_forms(&a, &a, 5.0, &s, T).unwrap();
        assert_eq!(q.real_part_dominated, None);
        assert_eq!(q.modulus_form.failure, Some(FailureReason::StrictDominance));
    }

    #[test]
    fn km_pair_examples() {
        let y = rv(&[1.0, 1.0]);
        let p = ScalarPair::real(1.0, 4.0).unwrap();
        let r = cor_km_pair(&rv(&[1.0, 4.0]), &y, &p, &space(&[2.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 1.0, 1e-15) && near(h, 1.0, 1e-15));
        assert!(r.equality && r.equality_conditions == Some(true));

        let p = ScalarPair::real(1.0, 2.0).unwrap();
        let r = cor_km_pair(&rv(&[1.0, 2.0]), &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 1.0 / 6.0, 1e-15));
        assert!(near(h, 3.0 - 2.0 * 2f64.sqrt(), 1e-15));

        let p = ScalarPair::real(1.5, 1.5).unwrap();
        let r = cor_km_pair(&y.scaled(real(1.5)), &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        assert_eq!(sides(&r), (0.0, 0.0));
        assert!(r.equality);
    }

    #[test]
    fn km_band_examples() {
        let y = rv(&[1.0, 1.0]);
        let b = RatioBand::positive(1.0, 4.0).unwrap();
        let r = km_band(&rv(&[1.0, 4.0]), &y, &b, &space(&[2.0, 1.0]), T).unwrap();
        assert!(r.equality && near(r.slack.unwrap(), 0.0, 1e-15));

        let b = RatioBand::positive(1.0, 2.0).unwrap();
        let r = km_band(&rv(&[1.0, 2.0]), &y, &b, &space(&[1.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 1.0 / 6.0, 1e-15) && near(h, 0.17157287525381, 1e-13));

        let b = RatioBand::positive(1.0, 4.0).unwrap();
        let r = km_band(&y.scaled(real(2.0)), &y, &b, &space(&[1.0, 1.0]), T).unwrap();
        assert_eq!(r.lhs, Some(0.0));

        let zero = RatioBand::new(0.0, 1.0).unwrap();
        let r = km_band(&y, &y, &zero, &space(&[1.0, 1.0]), T).unwrap();
        assert_eq!(r.failure, Some(FailureReason::NonPositiveBandFloor));
    }

    #[test]
    fn sgn_chain_examples() {
        let y = rv(&[1.0, 1.0]);
        let p = ScalarPair::real(1.0, 4.0).unwrap();
        let r = prop_sgn_chain(&rv(&[1.0, 2.0]), &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 1.0, 1e-14) && near(h, 6.0, 1e-14));
        let w = r.companion("link_weakened").unwrap();
        assert!(near(w.lhs, 6.0, 1e-14) && near(w.rhs, 6.0, 1e-14));
        assert_eq!(r.companion("link_modulus").unwrap().slack, 0.0);

        let r = prop_sgn_chain(&rv(&[1.0, 4.0]), &y, &p, &space(&[2.0, 1.0]), T).unwrap();
        let (l, h) = sides(&r);
        assert!(near(l, 18.0, 1e-13) && near(h, 18.0, 1e-13));
        assert!(r.equality && r.equality_conditions == Some(true));
    }

    #[test]
    fn sgn_chain_uses_the_conjugate_phase() {
        // Gamma = gamma = e^{i pi/4}: x = Gamma y gives u = ||y||^2 and a zero gap
        let z = Scalar::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        let p = ScalarPair::new(z, z).unwrap();
        let y = rv(&[1.0, 2.0]);
        let x = y.scaled(z);
        let r = prop_sgn_chain(&x, &y, &p, &space(&[1.0, 1.0]), T).unwrap();
        assert!(r.holds.unwrap(), "{r:?}");
        assert!(r.lhs.unwrap().abs() < 1e-12);
    }

    #[test]
    fn km_band_re_examples() {
        let y = rv(&[1.0, 1.0]);
        let b = RatioBand::positive(1.0, 4.0).unwrap();
        let r = km_band_re(&rv(&[1.0, 4.0]), &y, &b, &space(&[2.0, 1.0]), T).unwrap();
        assert!(r.equality);
        let m = r.companion("multiplied").unwrap();
        assert!(near(m.lhs, 18.0, 1e-13) && near(m.rhs, 18.0, 1e-13));

        let b = RatioBand::positive(1.0, 2.0).unwrap();
        let x = rv(&[1.0, 2.0]);
        let s = space(&[1.0, 1.0]);
        let r = km_band_re(&x, &y, &b, &s, T).unwrap();
        assert_eq!(
            (r.lhs, r.rhs),
            (
                km_band(&x, &y, &b, &s, T).unwrap().lhs,
                Some(b.km_coefficient())
            )
        );
        let m = r.companion("multiplied").unwrap();
        assert!(near(m.lhs, 1.0, 1e-14) && near(m.rhs, 1.0294372515229, 1e-12));
    }

    #[test]
    fn km_ball_rhs_increases_with_radius() {
        let mut prev = 0.0;
        for k in 1..1000 {
            let r = k as f64 / 1000.0 * 2.0;
            let v = km_ball_rhs(2.0, r);
            assert!(v > prev);
            prev = v;
        }
    }
}
