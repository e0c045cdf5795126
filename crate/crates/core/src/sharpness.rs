//! Equality witnesses and the extremal family showing that the constant 2 in
//! the abstract Klamkin-McLenaghan bound cannot be lowered.
//!
//! The family is `x = a + sqrt(eps) e` with `||a|| = ||e|| = 1`, `a` orthogonal
//! to `e` and `r = sqrt(eps)`. Plugging it into the bound with a generic
//! constant `C` forces `C >= 1 + sqrt(1 - eps)` for every `eps` in (0, 1).

use serde::{Deserialize, Serialize};

use crate::bounds::km_ball_rhs_from_square;
use crate::error::{Error, Result};
use crate::space::{real, Vector, WeightedSpace};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalWitness {
    pub epsilon: f64,
    pub a: Vector,
    pub e: Vector,
    pub x: Vector,
    pub r: f64,
    /// Smallest constant `C` for which the bound with `C` in place of 2 still
    /// holds at this witness.
    pub achieved_constant: f64,
}

/// The first two positive-weight indices, as unit directions.
fn orthonormal_pair(s: &WeightedSpace) -> Result<(Vector, Vector)> {
    let mut support = s.support();
    match (support.next(), support.next()) {
        (Some(i), Some(j)) => Ok((s.unit_direction(i)?, s.unit_direction(j)?)),
        _ => Err(Error::InvalidParameter(
            "need at least two positive weights for two orthonormal directions".into(),
        )),
    }
}

fn check_open_unit(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 && v < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{name} must lie in (0, 1), got {v}"
        )))
    }
}

pub fn extremal_family(epsilon: f64, s: &WeightedSpace) -> Result<ExtremalWitness> {
    check_open_unit("epsilon", epsilon)?;
    let (a, e) = orthonormal_pair(s)?;
    let r = epsilon.sqrt();
    let x = a.combine(real(1.0), &e, real(r))?;

    let norm_a = s.norm(&a)?;
    let modulus = s.inner(&x, &a)?.norm();
    let lhs = s.schwarz_gap(&x, &a)? / (modulus * norm_a * norm_a);
    // r^2 is eps by construction; using eps itself keeps ||a||^2 - r^2 exact
    let deficit = norm_a * norm_a - epsilon;
    let rhs_with_two = km_ball_rhs_from_square(norm_a, epsilon, deficit);
    Ok(ExtremalWitness {
        epsilon,
        a,
        e,
        x,
        r,
        achieved_constant: 2.0 * lhs / rhs_with_two,
    })
}

/// `(eps, C(eps))` over a grid; analytically `C(eps) = 1 + sqrt(1 - eps)`.
pub fn achieved_constant_curve(eps_grid: &[f64], s: &WeightedSpace) -> Result<Vec<(f64, f64)>> {
    eps_grid
        .iter()
        .map(|&eps| extremal_family(eps, s).map(|w| (eps, w.achieved_constant)))
        .collect()
}

/// Equality configuration for the premultiplicative bound: `||x - a|| = r` and
/// `||x||^2 + r^2 = ||a||^2`. Returns `(x, a)`.
pub fn equality_witness_premultiplicative(
    norm_a: f64,
    r: f64,
    s: &WeightedSpace,
) -> Result<(Vector, Vector)> {
    check_radius(norm_a, r)?;
    let (u1, u2) = orthonormal_pair(s)?;
    let deficit = (norm_a - r) * (norm_a + r);
    let along = deficit / norm_a;
    let across = r * deficit.sqrt() / norm_a;
    let x = u1.combine(real(along), &u2, real(across))?;
    Ok((x, u1.scaled(real(norm_a))))
}

/// Equality configuration for the abstract Klamkin-McLenaghan bound:
/// `||x - a|| = r` and `<x, a> = ||a|| (||a||^2 - r^2)^(1/2)`. Returns `(x, a)`.
pub fn equality_witness_km(norm_a: f64, r: f64, s: &WeightedSpace) -> Result<(Vector, Vector)> {
    check_radius(norm_a, r)?;
    let (u1, u2) = orthonormal_pair(s)?;
    let along = ((norm_a - r) * (norm_a + r)).sqrt();
    let gap = norm_a - along;
    let across = ((r - gap) * (r + gap)).max(0.0).sqrt();
    let x = u1.combine(real(along), &u2, real(across))?;
    Ok((x, u1.scaled(real(norm_a))))
}

/// Equality configuration for the additive bound: `||x - a|| = r`, `||x|| = ||a||`.
/// Requires `0 < r <= 2 ||a||`. Returns `(x, a)`.
pub fn equality_witness_additive(
    norm_a: f64,
    r: f64,
    s: &WeightedSpace,
) -> Result<(Vector, Vector)> {
    if !(norm_a.is_finite() && r.is_finite() && r > 0.0 && r <= 2.0 * norm_a) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < r <= 2 ||a||, got r = {r}, ||a|| = {norm_a}"
        )));
    }
    let (u1, u2) = orthonormal_pair(s)?;
    let along = norm_a - r * r / (2.0 * norm_a);
    let across = ((norm_a - along) * (norm_a + along)).max(0.0).sqrt();
    let x = u1.combine(real(along), &u2, real(across))?;
    Ok((x, u1.scaled(real(norm_a))))
}

fn check_radius(norm_a: f64, r: f64) -> Result<()> {
    if norm_a.is_finite() && r.is_finite() && r > 0.0 && r < norm_a {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "need 0 < r < ||a||, got r = {r}, ||a|| = {norm_a}"
        )))
    }
}

/// Two-point equality configuration for the band bound: `x = (m, M)`,
/// `y = (1, 1)` and weights `(sqrt(M/m), 1)`, which makes
/// `<x, y> = sqrt(Mm) ||y||^2`. Returns `(x, y, space)`.
pub fn equality_witness_band(m: f64, big_m: f64) -> Result<(Vector, Vector, WeightedSpace)> {
    check_band(m, big_m)?;
    // m = M gives unit weights
    two_point(m, big_m, (big_m / m).sqrt())
}

/// Same points with weights `(M/m, 1)`, so that `||x|| = sqrt(Mm) ||y||`:
/// equality in the multiplicative pair bound.
pub fn equality_witness_pair_multiplicative(
    m: f64,
    big_m: f64,
) -> Result<(Vector, Vector, WeightedSpace)> {
    check_band(m, big_m)?;
    two_point(m, big_m, big_m / m)
}

/// Same points with weights `((3M + m)/(M + 3m), 1)`, so that
/// `||x|| = (M + m)/2 ||y||`: equality in the additive pair bound.
pub fn equality_witness_pair_additive(
    m: f64,
    big_m: f64,
) -> Result<(Vector, Vector, WeightedSpace)> {
    check_band(m, big_m)?;
    two_point(m, big_m, (3.0 * big_m + m) / (big_m + 3.0 * m))
}

fn check_band(m: f64, big_m: f64) -> Result<()> {
    if m.is_finite() && big_m.is_finite() && m > 0.0 && m <= big_m {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "need 0 < m <= M, got m = {m}, M = {big_m}"
        )))
    }
}

fn two_point(m: f64, big_m: f64, w1: f64) -> Result<(Vector, Vector, WeightedSpace)> {
    Ok((
        Vector::from_real(&[m, big_m])?,
        Vector::from_real(&[1.0, 1.0])?,
        WeightedSpace::new(vec![w1, 1.0])?,
    ))
}
