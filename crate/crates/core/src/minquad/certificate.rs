use serde::Serialize;

use crate::geom::{contains_polygon, linf_distance_to_polygon, ConvexPolygon};
use crate::minquad::Quadrilateral;
use crate::num::Scalar;

/// Evidence that a quadrilateral circumscribes a body and satisfies the
/// edge-midpoint condition of minimizers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CircumscriptionCertificate<T> {
    pub contains_k: bool,
    /// Max-norm distance from each edge midpoint to the body, over `diam(K)`.
    pub midpoint_residuals: [T; 4],
    pub area_ratio: T,
    pub degenerate: bool,
}

impl<T: Scalar> CircumscriptionCertificate<T> {
    pub fn max_residual(&self) -> T {
        self.midpoint_residuals
            .iter()
            .fold(T::zero(), |acc, r| T::max_val(&acc, r))
    }
}

/// At a minimum-area circumscribed quadrilateral every edge midpoint lies in
/// the body; the residuals measure how far each one is from it.
pub fn midpoint_certificate<T: Scalar>(
    body: &ConvexPolygon<T>,
    quad: &Quadrilateral<T>,
    tol: &T,
) -> CircumscriptionCertificate<T> {
    let diam = T::from_f64(body.diameter());
    let midpoint_residuals = [0, 1, 2, 3].map(|i| {
        let d = linf_distance_to_polygon(&quad.edge_midpoint(i), body) / diam.clone();
        T::max_val(&T::zero(), &d)
    });
    CircumscriptionCertificate {
        contains_k: contains_polygon(&quad.to_polygon(), body, tol),
        midpoint_residuals,
        area_ratio: quad.area() / body.area(),
        degenerate: quad.is_degenerate(),
    }
}

/// Parallelogram of edge midpoints; its area is exactly half the quadrilateral's.
pub fn varignon<T: Scalar>(quad: &Quadrilateral<T>) -> crate::Result<ConvexPolygon<T>> {
    ConvexPolygon::new((0..4).map(|i| quad.edge_midpoint(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point2;
    use crate::num::{rat, Rational};

    fn pt(x: i64, y: i64) -> Point2<Rational> {
        Point2::new(rat(x, 1), rat(y, 1))
    }

    fn square_quad(k: i64) -> Quadrilateral<Rational> {
        Quadrilateral::new([pt(k, -k), pt(k, k), pt(-k, k), pt(-k, -k)]).unwrap()
    }

    #[test]
    fn body_equal_to_quad_has_zero_residuals() {
        let q = square_quad(1);
        let cert = midpoint_certificate(&q.to_polygon(), &q, &rat(0, 1));
        assert!(cert.contains_k);
        assert_eq!(cert.midpoint_residuals, [0, 0, 0, 0].map(|_| rat(0, 1)));
        assert_eq!(cert.area_ratio, rat(1, 1));
    }

    #[test]
    fn loose_quad_has_positive_residuals() {
        let body = square_quad(1).to_polygon();
        let cert = midpoint_certificate(&body, &square_quad(2), &rat(0, 1));
        assert!(cert.contains_k);
        assert!(cert.midpoint_residuals.iter().all(|r| *r > rat(0, 1)));
        assert_eq!(cert.area_ratio, rat(4, 1));
    }

    #[test]
    fn varignon_of_square() {
        let p = varignon(&square_quad(3)).unwrap();
        for v in [pt(3, 0), pt(0, 3), pt(-3, 0), pt(0, -3)] {
            assert!(p.vertices().contains(&v));
        }
        assert_eq!(p.area(), rat(18, 1));
    }

    #[test]
    fn varignon_midpoints() {
        let q = Quadrilateral::new([pt(0, 0), pt(4, 0), pt(5, 3), pt(1, 4)]).unwrap();
        let p = varignon(&q).unwrap();
        let expected = [
            Point2::new(rat(2, 1), rat(0, 1)),
            Point2::new(rat(9, 2), rat(3, 2)),
            Point2::new(rat(3, 1), rat(7, 2)),
            Point2::new(rat(1, 2), rat(2, 1)),
        ];
        assert_eq!(p.vertices(), &expected);
        let v = p.vertices();
        assert_eq!(&v[1] - &v[0], &v[2] - &v[3]);
        assert_eq!(p.area() * rat(2, 1), q.area());
    }
}
