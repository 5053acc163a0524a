use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::num::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point2<T> {
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    pub fn cross(&self, other: &Self) -> T {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        let two = T::one() + T::one();
        Self::new(
            (self.x.clone() + other.x.clone()) / two.clone(),
            (self.y.clone() + other.y.clone()) / two,
        )
    }

    /// Max-norm `‖p‖∞`.
    pub fn linf_norm(&self) -> T {
        T::max_val(&self.x.abs_val(), &self.y.abs_val())
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite_val() && self.y.is_finite_val()
    }

    pub fn to_f64(&self) -> Point2<f64> {
        Point2::new(self.x.to_f64(), self.y.to_f64())
    }

    pub fn from_f64(p: &Point2<f64>) -> Self {
        Self::new(T::from_f64(p.x), T::from_f64(p.y))
    }
}

impl Point2<f64> {
    pub fn norm(&self) -> f64 {
        self.x.hypot(self.y)
    }
}

impl<T: Scalar> Add for Point2<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Scalar> Sub for Point2<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<'a, T: Scalar> Sub for &'a Point2<T> {
    type Output = Point2<T>;

    fn sub(self, rhs: Self) -> Point2<T> {
        Point2::new(self.x.clone() - rhs.x.clone(), self.y.clone() - rhs.y.clone())
    }
}

impl<'a, T: Scalar> Add for &'a Point2<T> {
    type Output = Point2<T>;

    fn add(self, rhs: Self) -> Point2<T> {
        Point2::new(self.x.clone() + rhs.x.clone(), self.y.clone() + rhs.y.clone())
    }
}

impl<T: Scalar> Neg for Point2<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Scalar> Mul<T> for Point2<T> {
    type Output = Self;

    fn mul(self, k: T) -> Self {
        Self::new(self.x * k.clone(), self.y * k)
    }
}
