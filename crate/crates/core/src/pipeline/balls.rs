//! Max-norm ball checks: the outer bound on normalized minimizers and the
//! shrunken-ball inclusion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{contains_point, convex_hull, ConvexPolygon, Point2};
use crate::minquad::Quadrilateral;
use crate::num::Scalar;
use crate::pipeline::scene::unit_square;

/// `center + radius · B∞`; a radius of zero is the single point `center`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LinfBall<T> {
    pub center: Point2<T>,
    pub radius: T,
}

impl<T: Scalar> LinfBall<T> {
    pub fn new(center: Point2<T>, radius: T) -> Result<Self> {
        if radius < T::zero() {
            return Err(Error::DomainError(format!("negative radius {radius:?}")));
        }
        Ok(Self { center, radius })
    }

    /// Corners, counterclockwise from `(+, +)`; all equal for radius zero.
    pub fn corners(&self) -> [Point2<T>; 4] {
        let (c, r) = (&self.center, &self.radius);
        [
            Point2::new(c.x.clone() + r.clone(), c.y.clone() + r.clone()),
            Point2::new(c.x.clone() - r.clone(), c.y.clone() + r.clone()),
            Point2::new(c.x.clone() - r.clone(), c.y.clone() - r.clone()),
            Point2::new(c.x.clone() + r.clone(), c.y.clone() - r.clone()),
        ]
    }

    /// The ball as a polygon; fails for radius zero.
    pub fn to_polygon(&self) -> Result<ConvexPolygon<T>> {
        ConvexPolygon::new(self.corners().to_vec())
    }

    pub fn contains_ball(&self, inner: &Self) -> bool {
        (&inner.center - &self.center).linf_norm() + inner.radius.clone() <= self.radius
    }
}

/// Whether every vertex of a normalized quadrilateral has max-norm at most
/// `3 + tol`. A normalized minimizer always passes; failure signals a
/// broken upstream step.
pub fn outer_ball_check<T: Scalar>(quad: &Quadrilateral<T>, tol: &T) -> bool {
    let limit = T::from_i64(3) + tol.clone();
    quad.vertices().iter().all(|v| v.linf_norm() <= limit)
}

/// The three sets of the shrunken-ball inclusion and whether it holds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InnerBallInclusion<T> {
    /// `(1 − s) v + s B∞` with `s = r / (R + 1)`.
    pub lhs: LinfBall<T>,
    /// `conv({v} ∪ B∞)`.
    pub hull: ConvexPolygon<T>,
    /// `v + r B∞`.
    pub ball: LinfBall<T>,
    /// `lhs ⊆ hull` and `lhs ⊆ ball`, exact with rationals.
    pub holds: bool,
}

/// Builds the sets for `‖v‖∞ ≤ R`, `0 ≤ r ≤ R + 1` and checks the inclusion.
pub fn inner_ball_inclusion<T: Scalar>(v: &Point2<T>, big_r: &T, r: &T) -> Result<InnerBallInclusion<T>> {
    if v.linf_norm() > *big_r {
        return Err(Error::DomainError(format!("|v| = {:?} > R = {big_r:?}", v.linf_norm())));
    }
    if *r < T::zero() || *r > big_r.clone() + T::one() {
        return Err(Error::DomainError(format!("r = {r:?} outside [0, R + 1]")));
    }
    let s = r.clone() / (big_r.clone() + T::one());
    let lhs = LinfBall::new(v.scale(&(T::one() - s.clone())), s)?;
    let mut points = unit_square::<T>().vertices().to_vec();
    points.push(v.clone());
    let hull = convex_hull(&points)?;
    let ball = LinfBall::new(v.clone(), r.clone())?;
    let holds = ball.contains_ball(&lhs) && lhs.corners().iter().all(|p| contains_point(&hull, p, &T::zero()));
    Ok(InnerBallInclusion { lhs, hull, ball, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, Rational};

    fn pt(x: i64, y: i64) -> Point2<Rational> {
        Point2::new(rat(x, 1), rat(y, 1))
    }

    #[test]
    fn zero_radius_is_a_point() {
        let inc = inner_ball_inclusion(&pt(2, 1), &rat(2, 1), &rat(0, 1)).unwrap();
        assert_eq!(inc.lhs.center, pt(2, 1));
        assert!(inc.lhs.to_polygon().is_err());
        assert!(inc.holds);
    }

    #[test]
    fn origin_unit_ball() {
        let inc = inner_ball_inclusion(&pt(0, 0), &rat(0, 1), &rat(1, 1)).unwrap();
        let square = unit_square::<Rational>();
        assert_eq!(inc.lhs, LinfBall::new(pt(0, 0), rat(1, 1)).unwrap());
        assert_eq!(inc.hull.area(), square.area());
        assert_eq!(inc.ball.to_polygon().unwrap().area(), rat(4, 1));
        assert!(inc.holds);
    }

    #[test]
    fn shifted_example() {
        let inc = inner_ball_inclusion(&pt(3, 0), &rat(3, 1), &rat(2, 1)).unwrap();
        assert_eq!(inc.lhs.center, Point2::new(rat(3, 2), rat(0, 1)));
        assert_eq!(inc.lhs.radius, rat(1, 2));
        assert!(inc.holds);
    }

    #[test]
    fn domain_is_checked() {
        assert!(inner_ball_inclusion(&pt(3, 0), &rat(2, 1), &rat(1, 1)).is_err());
        assert!(inner_ball_inclusion(&pt(1, 0), &rat(2, 1), &rat(4, 1)).is_err());
        assert!(inner_ball_inclusion(&pt(1, 0), &rat(2, 1), &rat(-1, 1)).is_err());
    }

    #[test]
    fn outer_ball() {
        let rotated = Quadrilateral::new([pt(2, 0), pt(0, 2), pt(-2, 0), pt(0, -2)]).unwrap();
        assert!(outer_ball_check(&rotated, &rat(0, 1)));
        // kite with edge midpoints (1, -1), (1, 1), (-1, 1), (-1, -1); two vertices at max-norm 3 - e
        for e in [rat(1, 10), rat(1, 1000)] {
            let one = rat(1, 1);
            let three = rat(3, 1);
            let kite = Quadrilateral::new([
                Point2::new(&one - &e, &e - &three),
                Point2::new(&one + &e, &one - &e),
                Point2::new(&one - &e, &one + &e),
                Point2::new(&e - &three, &one - &e),
            ])
            .unwrap();
            let expected = [pt(1, -1), pt(1, 1), pt(-1, 1), pt(-1, -1)];
            for (i, m) in expected.iter().enumerate() {
                assert_eq!(&kite.edge_midpoint(i), m);
            }
            assert!(outer_ball_check(&kite, &rat(0, 1)));
        }
        let too_big = Quadrilateral::new([pt(4, 0), pt(0, 2), pt(-2, 0), pt(0, -2)]).unwrap();
        assert!(!outer_ball_check(&too_big, &rat(0, 1)));
    }
}
