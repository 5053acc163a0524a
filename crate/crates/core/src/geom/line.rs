use crate::error::{Error, Result};
use crate::geom::Point2;
use crate::num::Scalar;

/// The line `{(x, y) : a·x + b·y = c}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Line2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

/// Which closed half-plane of a [`Line2`] to keep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `a·x + b·y ≤ c`
    Below,
    /// `a·x + b·y ≥ c`
    Above,
}

impl<T: Scalar> Line2<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateInput("line with zero normal".into()));
        }
        Ok(Self { a, b, c })
    }

    /// Line through two distinct points.
    pub fn through(p: &Point2<T>, q: &Point2<T>) -> Result<Self> {
        let a = q.y.clone() - p.y.clone();
        let b = p.x.clone() - q.x.clone();
        let c = a.clone() * p.x.clone() + b.clone() * p.y.clone();
        Self::new(a, b, c)
    }

    /// Graph of `x ↦ slope·(x − x0) + y0`.
    pub fn from_slope(slope: T, x0: T, y0: T) -> Self {
        // slope·x − y = slope·x0 − y0
        let c = slope.clone() * x0 - y0;
        Self { a: slope, b: -T::one(), c }
    }

    pub fn horizontal(y: T) -> Self {
        Self { a: T::zero(), b: T::one(), c: y }
    }

    pub fn vertical(x: T) -> Self {
        Self { a: T::one(), b: T::zero(), c: x }
    }

    /// `a·x + b·y − c`; negative below, positive above.
    pub fn eval(&self, p: &Point2<T>) -> T {
        self.a.clone() * p.x.clone() + self.b.clone() * p.y.clone() - self.c.clone()
    }

    /// Point on the line with the given abscissa.
    pub fn at_x(&self, x: T) -> Result<Point2<T>> {
        line_intersection(self, &Self::vertical(x))
    }

    pub fn at_y(&self, y: T) -> Result<Point2<T>> {
        line_intersection(self, &Self::horizontal(y))
    }
}

/// Unique common point of two lines.
pub fn line_intersection<T: Scalar>(l1: &Line2<T>, l2: &Line2<T>) -> Result<Point2<T>> {
    let det = l1.a.clone() * l2.b.clone() - l2.a.clone() * l1.b.clone();
    if det.is_zero() {
        return Err(Error::ParallelLines);
    }
    let x = (l1.c.clone() * l2.b.clone() - l2.c.clone() * l1.b.clone()) / det.clone();
    let y = (l1.a.clone() * l2.c.clone() - l2.a.clone() * l1.c.clone()) / det;
    Ok(Point2::new(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, Rational};

    #[test]
    fn axes_meet_at_origin() {
        let x_axis = Line2::<Rational>::horizontal(rat(0, 1));
        let y_axis = Line2::<Rational>::vertical(rat(0, 1));
        assert_eq!(line_intersection(&x_axis, &y_axis).unwrap(), Point2::origin());
    }

    #[test]
    fn parallel_lines_fail() {
        let l1 = Line2::<Rational>::horizontal(rat(0, 1));
        let l2 = Line2::<Rational>::horizontal(rat(1, 1));
        assert_eq!(line_intersection(&l1, &l2), Err(Error::ParallelLines));
    }

    #[test]
    fn zero_normal_rejected() {
        assert!(Line2::new(0.0, 0.0, 1.0).is_err());
        let p = Point2::new(1.0, 1.0);
        assert!(Line2::through(&p, &p).is_err());
    }

    #[test]
    fn through_and_slope_forms_agree() {
        let p = Point2::new(rat(1, 1), rat(2, 1));
        let q = Point2::new(rat(3, 1), rat(-2, 1));
        let l = Line2::through(&p, &q).unwrap();
        let m = Line2::from_slope(rat(-2, 1), rat(1, 1), rat(2, 1));
        assert_eq!(l.eval(&q), rat(0, 1));
        assert_eq!(m.eval(&q), rat(0, 1));
        assert_eq!(l.at_x(rat(0, 1)).unwrap(), m.at_x(rat(0, 1)).unwrap());
    }
}
