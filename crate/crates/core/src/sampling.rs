//! Seeded random instances that satisfy the hypotheses of each bound by
//! construction.
//!
//! Every generator draws the space first (dimension from the caller's list,
//! weights in `[0.1, 2)` with an occasional zero atom, never all zero), then
//! the data. With `complex = false` all coordinates and scalars are real.
//! Roughly one instance in eight is pushed onto the boundary of its
//! hypothesis, where equality cases live.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::conditions::{RatioBand, ScalarPair};
use crate::error::{Error, Result};
use crate::integral::EntryBounds;
use crate::space::{real, Scalar, Vector, WeightedSpace};

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BallInstance {
    pub space: WeightedSpace,
    pub x: Vector,
    pub a: Vector,
    pub r: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairInstance {
    pub space: WeightedSpace,
    pub x: Vector,
    pub y: Vector,
    pub pair: ScalarPair,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandInstance {
    pub space: WeightedSpace,
    pub x: Vector,
    pub y: Vector,
    pub band: RatioBand,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryInstance {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub bounds: EntryBounds,
}

pub fn check_dims(dims: &[usize]) -> Result<()> {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidParameter(
            "dimensions must be a non-empty list of positive sizes".into(),
        ));
    }
    Ok(())
}

fn pick_dim<R: Rng>(rng: &mut R, dims: &[usize]) -> usize {
    *dims.choose(rng).expect("dims checked non-empty")
}

pub fn random_space<R: Rng>(rng: &mut R, dim: usize) -> WeightedSpace {
    let mut w: Vec<f64> = (0..dim)
        .map(|_| {
            if dim > 1 && rng.gen_bool(0.1) {
                0.0
            } else {
                rng.gen_range(0.1..2.0)
            }
        })
        .collect();
    if w.iter().all(|&v| v == 0.0) {
        w[0] = 1.0;
    }
    WeightedSpace::new(w).expect("generated weights are valid")
}

fn scalar<R: Rng>(rng: &mut R, complex: bool) -> Scalar {
    let re = rng.gen_range(-1.0..1.0);
    let im = if complex {
        rng.gen_range(-1.0..1.0)
    } else {
        0.0
    };
    Scalar::new(re, im)
}

fn raw_vector<R: Rng>(rng: &mut R, dim: usize, complex: bool) -> Vector {
    Vector::new((0..dim).map(|_| scalar(rng, complex)).collect()).expect("finite coordinates")
}

/// A vector of norm 1 in `s`, nonzero on the support.
fn unit_vector<R: Rng>(rng: &mut R, s: &WeightedSpace, complex: bool) -> Vector {
    loop {
        let v = raw_vector(rng, s.dim(), complex);
        let n = s.norm(&v).expect("same dimension");
        if n > 1e-3 {
            return v.scaled(real(1.0 / n));
        }
    }
}

fn magnitude<R: Rng>(rng: &mut R) -> f64 {
    10f64.powf(rng.gen_range(-1.0..1.0))
}

/// Radius fraction in `(0, 1]`, exactly 1 about one time in eight.
fn fill<R: Rng>(rng: &mut R) -> f64 {
    if rng.gen_bool(0.125) {
        1.0
    } else {
        rng.gen_range(0.0..1.0)
    }
}

/// `||x - a|| <= r`, with `r < ||a||` when `strict`.
pub fn ball<R: Rng>(rng: &mut R, dims: &[usize], complex: bool, strict: bool) -> BallInstance {
    let dim = pick_dim(rng, dims);
    let space = random_space(rng, dim);
    let norm_a = magnitude(rng);
    let a = unit_vector(rng, &space, complex).scaled(real(norm_a));
    let r = if strict {
        norm_a * rng.gen_range(0.02..0.98)
    } else {
        norm_a * rng.gen_range(0.02..3.0)
    };
    // a slight shrink keeps rounding from pushing boundary draws outside the ball
    let step = r * fill(rng) * (1.0 - 1e-12);
    let u = unit_vector(rng, &space, complex);
    let x = a
        .combine(real(1.0), &u, real(step))
        .expect("same dimension");
    BallInstance { space, x, a, r }
}

/// `Re(Gamma conj(gamma)) > 0` and `||x - (Gamma + gamma)/2 y|| <= |Gamma - gamma| ||y|| / 2`.
pub fn pair<R: Rng>(rng: &mut R, dims: &[usize], complex: bool) -> PairInstance {
    let dim = pick_dim(rng, dims);
    let space = random_space(rng, dim);
    let y = unit_vector(rng, &space, complex).scaled(real(magnitude(rng)));
    let lower = loop {
        let g = scalar(rng, complex) * magnitude(rng);
        if g.norm() > 1e-3 {
            break g;
        }
    };
    let t = Scalar::new(
        rng.gen_range(0.05..4.0),
        if complex {
            rng.gen_range(-2.0..2.0)
        } else {
            0.0
        },
    );
    let upper = if rng.gen_bool(0.05) { lower } else { lower * t };
    let pair = ScalarPair::new(lower, upper).expect("finite scalars");
    let radius = pair.half_width() * space.norm(&y).expect("same dimension");
    let u = unit_vector(rng, &space, complex);
    let x = y
        .combine(pair.center(), &u, real(radius * fill(rng) * (1.0 - 1e-12)))
        .expect("same dimension");
    PairInstance { space, x, y, pair }
}

/// `0 < m <= M` with `Re<M y - x, x - m y> >= 0`. Half the draws satisfy the
/// band pointwise (`x_k = t_k y_k`, `t_k` in `[m, M]`), the rest only in the
/// integrated sense.
pub fn band<R: Rng>(rng: &mut R, dims: &[usize], complex: bool) -> BandInstance {
    let dim = pick_dim(rng, dims);
    let space = random_space(rng, dim);
    let m = magnitude(rng);
    let big_m = if rng.gen_bool(0.05) {
        m
    } else {
        m * rng.gen_range(1.0..9.0)
    };
    let band = RatioBand::positive(m, big_m).expect("0 < m <= M");
    let y = unit_vector(rng, &space, complex).scaled(real(magnitude(rng)));
    let x = if rng.gen_bool(0.5) {
        let coords = y
            .coords()
            .iter()
            .map(|&yk| {
                let t = match rng.gen_range(0..4) {
                    0 => m,
                    1 => big_m,
                    _ => rng.gen_range(m..=big_m),
                };
                yk * t
            })
            .collect();
        Vector::new(coords).expect("finite coordinates")
    } else {
        let pair = band.as_pair();
        let radius = pair.half_width() * space.norm(&y).expect("same dimension");
        let u = unit_vector(rng, &space, complex);
        y.combine(pair.center(), &u, real(radius * fill(rng) * (1.0 - 1e-12)))
            .expect("same dimension")
    };
    BandInstance { space, x, y, band }
}

/// Real non-negative data with `y > 0` on the support and `x` not identically
/// zero there.
pub fn real_nonneg<R: Rng>(rng: &mut R, dims: &[usize]) -> (Vector, Vector, WeightedSpace) {
    let dim = pick_dim(rng, dims);
    let space = random_space(rng, dim);
    let n = space.dim();
    let y: Vec<f64> = (0..n).map(|_| magnitude(rng)).collect();
    let scale = magnitude(rng);
    let mut x: Vec<f64> = y
        .iter()
        .map(|&yk| {
            if rng.gen_bool(0.1) {
                0.0
            } else {
                yk * scale * rng.gen_range(0.0..4.0)
            }
        })
        .collect();
    let first = space.support().next().expect("support is non-empty");
    if x[first] == 0.0 {
        x[first] = y[first] * scale;
    }
    (
        Vector::from_real(&x).expect("finite"),
        Vector::from_real(&y).expect("finite"),
        space,
    )
}

/// Positive tuples inside random entry bounds.
pub fn entry_bounded<R: Rng>(rng: &mut R, dims: &[usize]) -> EntryInstance {
    let n = pick_dim(rng, dims);
    let a = magnitude(rng);
    let big_a = a * rng.gen_range(1.0..5.0);
    let b = magnitude(rng);
    let big_b = b * rng.gen_range(1.0..5.0);
    let bounds = EntryBounds::new(a, big_a, b, big_b).expect("ordered positive bounds");
    let draw = |rng: &mut R, lo: f64, hi: f64| if lo < hi { rng.gen_range(lo..=hi) } else { lo };
    EntryInstance {
        a: (0..n).map(|_| draw(rng, a, big_a)).collect(),
        b: (0..n).map(|_| draw(rng, b, big_b)).collect(),
        bounds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{check_ball, check_band, check_pair};
    use crate::tolerance::Tolerance;

    const DIMS: [usize; 8] = [1, 2, 3, 4, 5, 6, 7, 8];

    #[test]
    fn generators_satisfy_their_hypotheses() {
        let mut g = rng(7);
        let t = Tolerance::default();
        for k in 0..2000 {
            let complex = k % 2 == 1;
            let b = ball(&mut g, &DIMS, complex, true);
            assert!(
                check_ball(&b.x, &b.a, b.r, true, &b.space, t)
                    .unwrap()
                    .satisfied
            );
            let b = ball(&mut g, &DIMS, complex, false);
            assert!(
                check_ball(&b.x, &b.a, b.r, false, &b.space, t)
                    .unwrap()
                    .satisfied
            );
            let p = pair(&mut g, &DIMS, complex);
            assert!(p.pair.positive_real_product());
            assert!(
                check_pair(&p.x, &p.y, &p.pair, &p.space, t)
                    .unwrap()
                    .satisfied
            );
            let b = band(&mut g, &DIMS, complex);
            assert!(
                check_band(&b.x, &b.y, &b.band, &b.space, t)
                    .unwrap()
                    .satisfied
            );
        }
    }

    #[test]
    fn same_seed_same_instances() {
        let (mut a, mut b) = (rng(42), rng(42));
        for _ in 0..50 {
            assert_eq!(pair(&mut a, &DIMS, true), pair(&mut b, &DIMS, true));
        }
    }

    #[test]
    fn dims_must_be_positive() {
        assert!(check_dims(&[]).is_err());
        assert!(check_dims(&[0, 2]).is_err());
        assert!(check_dims(&[1, 8]).is_ok());
    }
}
