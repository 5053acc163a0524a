use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Point2};
use crate::num::Scalar;

/// `p ↦ M·p + t` with `M = [[m11, m12], [m21, m22]]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AffineMap2<T> {
    pub m11: T,
    pub m12: T,
    pub m21: T,
    pub m22: T,
    pub t1: T,
    pub t2: T,
}

impl<T: Scalar> AffineMap2<T> {
    pub fn new(m11: T, m12: T, m21: T, m22: T, t1: T, t2: T) -> Result<Self> {
        let map = Self { m11, m12, m21, m22, t1, t2 };
        if map.det().is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(map)
    }

    pub fn identity() -> Self {
        Self {
            m11: T::one(),
            m12: T::zero(),
            m21: T::zero(),
            m22: T::one(),
            t1: T::zero(),
            t2: T::zero(),
        }
    }

    pub fn scaling(k: T) -> Result<Self> {
        Self::new(k.clone(), T::zero(), T::zero(), k, T::zero(), T::zero())
    }

    pub fn translation(t1: T, t2: T) -> Self {
        Self { t1, t2, ..Self::identity() }
    }

    pub fn det(&self) -> T {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m21.clone()
    }

    pub fn apply(&self, p: &Point2<T>) -> Point2<T> {
        Point2::new(
            self.m11.clone() * p.x.clone() + self.m12.clone() * p.y.clone() + self.t1.clone(),
            self.m21.clone() * p.x.clone() + self.m22.clone() * p.y.clone() + self.t2.clone(),
        )
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Self) -> Self {
        let Self { m11, m12, m21, m22, t1, t2 } = self;
        Self {
            m11: m11.clone() * inner.m11.clone() + m12.clone() * inner.m21.clone(),
            m12: m11.clone() * inner.m12.clone() + m12.clone() * inner.m22.clone(),
            m21: m21.clone() * inner.m11.clone() + m22.clone() * inner.m21.clone(),
            m22: m21.clone() * inner.m12.clone() + m22.clone() * inner.m22.clone(),
            t1: m11.clone() * inner.t1.clone() + m12.clone() * inner.t2.clone() + t1.clone(),
            t2: m21.clone() * inner.t1.clone() + m22.clone() * inner.t2.clone() + t2.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMap);
        }
        let m11 = self.m22.clone() / det.clone();
        let m12 = -self.m12.clone() / det.clone();
        let m21 = -self.m21.clone() / det.clone();
        let m22 = self.m11.clone() / det;
        let t1 = -(m11.clone() * self.t1.clone() + m12.clone() * self.t2.clone());
        let t2 = -(m21.clone() * self.t1.clone() + m22.clone() * self.t2.clone());
        Ok(Self { m11, m12, m21, m22, t1, t2 })
    }

    /// The affine map sending the triangle `(p0, p1, p2)` onto `(q0, q1, q2)`.
    pub fn from_triangles(src: [&Point2<T>; 3], dst: [&Point2<T>; 3]) -> Result<Self> {
        let e1 = src[1] - src[0];
        let e2 = src[2] - src[0];
        let f1 = dst[1] - dst[0];
        let f2 = dst[2] - dst[0];
        let basis = Self::new(e1.x, e2.x, e1.y, e2.y, T::zero(), T::zero())?;
        let target = Self { m11: f1.x, m12: f2.x, m21: f1.y, m22: f2.y, t1: T::zero(), t2: T::zero() };
        let linear = target.compose(&basis.inverse()?);
        let moved = linear.apply(src[0]);
        let map = Self {
            t1: dst[0].x.clone() - moved.x,
            t2: dst[0].y.clone() - moved.y,
            ..linear
        };
        if map.det().is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(map)
    }

    pub fn to_f64(&self) -> AffineMap2<f64> {
        AffineMap2 {
            m11: self.m11.to_f64(),
            m12: self.m12.to_f64(),
            m21: self.m21.to_f64(),
            m22: self.m22.to_f64(),
            t1: self.t1.to_f64(),
            t2: self.t2.to_f64(),
        }
    }
}

impl<T: Scalar> ConvexPolygon<T> {
    /// Image under `map`, re-oriented counterclockwise when `det < 0`.
    pub fn apply_affine(&self, map: &AffineMap2<T>) -> Result<Self> {
        let det = map.det();
        if det.is_zero() {
            return Err(Error::SingularMap);
        }
        let mut image: Vec<_> = self.vertices().iter().map(|p| map.apply(p)).collect();
        if det < T::zero() {
            image.reverse();
        }
        ConvexPolygon::new(image)
    }
}
