//! Complex scalars and finite weighted inner-product spaces.
//!
//! A [`WeightedSpace`] with weights `w` carries the inner product
//! `<x, y> = sum_k w_k x_k conj(y_k)`, linear in the first slot. Zero weights
//! are admitted; coordinates sitting on them never influence a result.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field element of the real or complex scalar field.
pub type Scalar = Complex64;

/// Real scalar as a [`Scalar`].
pub fn real(v: f64) -> Scalar {
    Scalar::new(v, 0.0)
}

/// `z / |z|`, or `None` when `|z|` is below the denominator floor.
pub fn sgn(z: Scalar) -> Option<Scalar> {
    let n = z.norm();
    (n > crate::tolerance::DENOMINATOR_FLOOR).then(|| z / n)
}

/// Coordinate vector over [`Scalar`]. All coordinates are finite.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Scalar>", into = "Vec<Scalar>")]
pub struct Vector(Vec<Scalar>);

impl TryFrom<Vec<Scalar>> for Vector {
    type Error = Error;

    fn try_from(coords: Vec<Scalar>) -> Result<Self> {
        Vector::new(coords)
    }
}

impl From<Vector> for Vec<Scalar> {
    fn from(v: Vector) -> Self {
        v.0
    }
}

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("vector coordinates"));
        }
        Ok(Vector(coords))
    }

    pub fn from_real(coords: &[f64]) -> Result<Self> {
        Vector::new(coords.iter().copied().map(real).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::new(0.0, 0.0); dim])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    /// True when every imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.0.iter().all(|z| z.im == 0.0)
    }

    pub fn scaled(&self, c: Scalar) -> Vector {
        Vector(self.0.iter().map(|z| z * c).collect())
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: Scalar, other: &Vector, beta: Scalar) -> Result<Vector> {
        check_len(self.len(), other.len())?;
        Ok(Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| alpha * x + beta * y)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.combine(real(1.0), other, real(-1.0))
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.combine(real(1.0), other, real(1.0))
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Finite-dimensional space with non-negative weights, at least one positive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct WeightedSpace {
    weights: Vec<f64>,
}

impl TryFrom<Vec<f64>> for WeightedSpace {
    type Error = Error;

    fn try_from(weights: Vec<f64>) -> Result<Self> {
        WeightedSpace::new(weights)
    }
}

impl From<WeightedSpace> for Vec<f64> {
    fn from(s: WeightedSpace) -> Self {
        s.weights
    }
}

impl WeightedSpace {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("dimension must be at least 1".into()));
        }
        if weights.iter().any(|w| !w.is_finite()) {
            return Err(Error::NonFinite("weights"));
        }
        if weights.iter().any(|&w| w < 0.0) {
            return Err(Error::InvalidWeights("weights must be non-negative".into()));
        }
        if !weights.iter().any(|&w| w > 0.0) {
            return Err(Error::InvalidWeights(
                "at least one weight must be positive".into(),
            ));
        }
        Ok(WeightedSpace { weights })
    }

    /// Unit weights: the standard (unweighted) space `K^dim`.
    pub fn uniform(dim: usize) -> Result<Self> {
        WeightedSpace::new(vec![1.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Indices carrying positive weight.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > 0.0)
            .map(|(k, _)| k)
    }

    pub fn check_member(&self, x: &Vector) -> Result<()> {
        check_len(self.dim(), x.len())
    }

    /// `sum_k w_k x_k conj(y_k)`.
    pub fn inner(&self, x: &Vector, y: &Vector) -> Result<Scalar> {
        self.check_member(x)?;
        self.check_member(y)?;
        Ok(self
            .weights
            .iter()
            .zip(x.coords().iter().zip(y.coords()))
            .filter(|(&w, _)| w > 0.0)
            .map(|(&w, (a, b))| a * b.conj() * w)
            .sum())
    }

    pub fn norm_sq(&self, x: &Vector) -> Result<f64> {
        self.check_member(x)?;
        Ok(self
            .weights
            .iter()
            .zip(x.coords())
            .filter(|(&w, _)| w > 0.0)
            .map(|(&w, z)| w * z.norm_sqr())
            .sum())
    }

    pub fn norm(&self, x: &Vector) -> Result<f64> {
        self.norm_sq(x).map(f64::sqrt)
    }

    /// `||x - a||`.
    pub fn distance(&self, x: &Vector, a: &Vector) -> Result<f64> {
        self.norm(&x.sub(a)?)
    }

    /// Schwarz gap `||x||^2 ||y||^2 - |<x, y>|^2`.
    ///
    /// Evaluated through the Lagrange identity
    /// `sum_{i<j} w_i w_j |x_i y_j - x_j y_i|^2`, which is non-negative term
    /// by term and free of the cancellation in the direct difference.
    pub fn schwarz_gap(&self, x: &Vector, y: &Vector) -> Result<f64> {
        self.check_member(x)?;
        self.check_member(y)?;
        let pts: Vec<(f64, Scalar, Scalar)> = self
            .support()
            .map(|k| (self.weights[k], x.coords()[k], y.coords()[k]))
            .collect();
        let mut gap = 0.0;
        for (i, &(wi, xi, yi)) in pts.iter().enumerate() {
            let mut row = 0.0;
            for &(wj, xj, yj) in &pts[i + 1..] {
                row += wj * (xi * yj - xj * yi).norm_sqr();
            }
            gap += wi * row;
        }
        Ok(gap)
    }

    /// Unit vector `e_k / sqrt(w_k)` in the weighted norm. `k` must carry positive weight.
    pub fn unit_direction(&self, k: usize) -> Result<Vector> {
        match self.weights.get(k) {
            Some(&w) if w > 0.0 => {
                let mut v = Vector::zeros(self.dim());
                v.0[k] = real(1.0 / w.sqrt());
                Ok(v)
            }
            Some(_) => Err(Error::InvalidParameter(format!(
                "index {k} carries zero weight"
            ))),
            None => Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: k + 1,
            }),
        }
    }
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

    #[test]
    fn inner_product_examples() {
        let s = space(&[1.0, 1.0]);
        assert_eq!(
            s.inner(&rv(&[1.0, 2.0]), &rv(&[1.0, 1.0])).unwrap(),
            real(3.0)
        );
        assert_eq!(
            s.inner(&rv(&[1.0, 0.0]), &rv(&[1.0, 0.0])).unwrap(),
            real(1.0)
        );
        let s = space(&[2.0, 1.0]);
        assert_eq!(
            s.inner(&rv(&[1.0, 4.0]), &rv(&[1.0, 1.0])).unwrap(),
            real(6.0)
        );
    }

    #[test]
    fn inner_product_conjugates_second_slot() {
        let s = space(&[1.0]);
        let x = Vector::new(vec![Scalar::new(0.0, 1.0)]).unwrap();
        let y = Vector::new(vec![Scalar::new(1.0, 0.0)]).unwrap();
        assert_eq!(s.inner(&x, &y).unwrap(), Scalar::new(0.0, 1.0));
        assert_eq!(s.inner(&y, &x).unwrap(), Scalar::new(0.0, -1.0));
    }

    #[test]
    fn norm_and_distance_examples() {
        let s = space(&[1.0, 1.0]);
        assert!((s.norm(&rv(&[1.0, 2.0])).unwrap() - 5f64.sqrt()).abs() < 1e-15);
        assert_eq!(s.norm(&rv(&[0.0, 0.0])).unwrap(), 0.0);
        let d = s.distance(&rv(&[0.64, 0.48]), &rv(&[1.0, 0.0])).unwrap();
        assert!((d - 0.6).abs() < 1e-15);
        let d = s
            .distance(&rv(&[1.0, 0.866025403784]), &rv(&[1.0, 0.0]))
            .unwrap();
        assert!((d - 0.866025403784).abs() < 1e-15);
        let x = rv(&[0.3, -0.7]);
        assert_eq!(s.distance(&x, &x).unwrap(), 0.0);
        let s = space(&[2.0, 1.0]);
        assert!((s.norm(&rv(&[1.0, 4.0])).unwrap() - 18f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn zero_weight_coordinates_are_ignored() {
        let s = space(&[1.0, 0.0]);
        assert_eq!(s.norm(&rv(&[0.0, 1e6])).unwrap(), 0.0);
        assert_eq!(
            s.inner(&rv(&[2.0, 1e6]), &rv(&[3.0, -7.0])).unwrap(),
            real(6.0)
        );
        assert_eq!(s.support().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(WeightedSpace::new(vec![]).is_err());
        assert!(WeightedSpace::new(vec![0.0, 0.0]).is_err());
        assert!(WeightedSpace::new(vec![1.0, -0.5]).is_err());
        assert!(WeightedSpace::new(vec![f64::NAN]).is_err());
        assert!(Vector::from_real(&[1.0, f64::INFINITY]).is_err());
        let s = space(&[1.0, 1.0]);
        assert_eq!(
            s.inner(&rv(&[1.0]), &rv(&[1.0, 2.0])),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        );
        assert!(s.unit_direction(5).is_err());
        assert!(space(&[0.0, 1.0]).unit_direction(0).is_err());
    }

    #[test]
    fn unit_direction_is_unit_in_weighted_norm() {
        let s = space(&[4.0, 0.25, 3.0]);
        for k in 0..3 {
            let e = s.unit_direction(k).unwrap();
            assert!((s.norm(&e).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn schwarz_gap_matches_direct_difference() {
        let s = space(&[2.0, 1.0]);
        // 18 * 3 - 36
        assert!((s.schwarz_gap(&rv(&[1.0, 4.0]), &rv(&[1.0, 1.0])).unwrap() - 18.0).abs() < 1e-12);
        let x = rv(&[3.0, 0.0]);
        assert_eq!(s.schwarz_gap(&x, &x.scaled(real(2.5))).unwrap(), 0.0);
    }

    fn coords(dim: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((-10.0..10.0f64, -10.0..10.0f64), dim)
    }

    fn to_vec(c: &[(f64, f64)]) -> Vector {
        Vector::new(c.iter().map(|&(a, b)| Scalar::new(a, b)).collect()).unwrap()
    }

    proptest! {
        #[test]
        fn forward_schwarz_and_parallelogram(
            (w, x, y) in (1usize..8).prop_flat_map(|n| (
                prop::collection::vec(0.0..3.0f64, n).prop_map(|mut w| { w[0] += 0.1; w }),
                coords(n),
                coords(n),
            ))
        ) {
            let s = WeightedSpace::new(w).unwrap();
            let (x, y) = (to_vec(&x), to_vec(&y));
            let nx = s.norm(&x).unwrap();
            let ny = s.norm(&y).unwrap();
            let ip = s.inner(&x, &y).unwrap();
            let scale = (nx * ny).max(1.0);
            prop_assert!(ip.norm() <= nx * ny + 1e-12 * scale);

            let back = s.inner(&y, &x).unwrap();
            prop_assert!((back - ip.conj()).norm() <= 1e-12 * scale);

            let xx = s.inner(&x, &x).unwrap();
            prop_assert!(xx.re >= 0.0);
            prop_assert!(xx.im.abs() <= 1e-15 * xx.re.max(1.0));

            let lhs = s.norm_sq(&x.add(&y).unwrap()).unwrap() + s.norm_sq(&x.sub(&y).unwrap()).unwrap();
            let rhs = 2.0 * nx * nx + 2.0 * ny * ny;
            prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1.0));

            let gap = s.schwarz_gap(&x, &y).unwrap();
            let direct = nx * nx * ny * ny - ip.norm_sqr();
            prop_assert!(gap >= 0.0);
            prop_assert!((gap - direct).abs() <= 1e-12 * (nx * nx * ny * ny).max(1.0));
        }
    }
}
