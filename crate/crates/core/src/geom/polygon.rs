use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Line2, Point2, Side};
use crate::num::Scalar;

/// Strictly convex polygon with counterclockwise vertices.
///
/// Consecutive edge vectors always turn strictly left, so there are no
/// duplicate or collinear vertices and the area is positive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvexPolygon<T> {
    vertices: Vec<Point2<T>>,
}

impl<T: Scalar> ConvexPolygon<T> {
    /// Validates an already ordered vertex cycle.
    pub fn new(vertices: Vec<Point2<T>>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidPolygon(format!("{n} vertices")));
        }
        if let Some(p) = vertices.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidPolygon(format!("non-finite vertex {p:?}")));
        }
        for i in 0..n {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % n];
            let c = &vertices[(i + 2) % n];
            if (b - a).cross(&(c - b)) <= T::zero() {
                return Err(Error::InvalidPolygon(format!(
                    "vertex {} does not turn strictly left",
                    (i + 1) % n
                )));
            }
        }
        // Strict left turns everywhere also admit multiply-wound cycles.
        if twice_signed_area(&vertices) <= T::zero() || !winds_once(&vertices) {
            return Err(Error::InvalidPolygon("vertex cycle is not simple".into()));
        }
        Ok(Self { vertices })
    }

    /// Convex hull of an arbitrary point set.
    pub fn from_points(points: &[Point2<T>]) -> Result<Self> {
        convex_hull(points)
    }

    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point2<T>> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Edges `(v_i, v_{i+1})` in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point2<T>, &Point2<T>)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> T {
        polygon_area(self)
    }

    /// Largest Euclidean distance between two vertices, in floating point.
    pub fn diameter(&self) -> f64 {
        let pts: Vec<Point2<f64>> = self.vertices.iter().map(Point2::to_f64).collect();
        let mut best = 0.0f64;
        for (i, p) in pts.iter().enumerate() {
            for q in &pts[i + 1..] {
                best = best.max((q - p).norm());
            }
        }
        best
    }

    pub fn scale(&self, k: &T) -> Result<Self> {
        if *k <= T::zero() {
            return Err(Error::SingularMap);
        }
        Self::new(self.vertices.iter().map(|p| p.scale(k)).collect())
    }

    pub fn to_f64(&self) -> ConvexPolygon<f64> {
        ConvexPolygon { vertices: self.vertices.iter().map(Point2::to_f64).collect() }
    }

    /// Exact image of a float polygon (rational backend) or a copy.
    pub fn from_f64(poly: &ConvexPolygon<f64>) -> Result<Self> {
        Self::new(poly.vertices.iter().map(Point2::from_f64).collect())
    }

    pub fn contains_point(&self, p: &Point2<T>, tol: &T) -> bool {
        contains_point(self, p, tol)
    }
}

fn twice_signed_area<T: Scalar>(vertices: &[Point2<T>]) -> T {
    let n = vertices.len();
    (0..n).fold(T::zero(), |acc, i| acc + vertices[i].cross(&vertices[(i + 1) % n]))
}

/// Edge directions of a left-turning cycle sweep the circle once.
fn winds_once<T: Scalar>(vertices: &[Point2<T>]) -> bool {
    let n = vertices.len();
    let upper = |d: &Point2<T>| d.y > T::zero() || (d.y.is_zero() && d.x > T::zero());
    // strict angular order of directions on [0, 2π)
    let before = |a: &Point2<T>, b: &Point2<T>| match (upper(a), upper(b)) {
        (true, false) => true,
        (false, true) => false,
        _ => a.cross(b) > T::zero(),
    };
    let dirs: Vec<Point2<T>> = (0..n).map(|i| &vertices[(i + 1) % n] - &vertices[i]).collect();
    let wraps = (0..n).filter(|&i| !before(&dirs[i], &dirs[(i + 1) % n])).count();
    wraps == 1
}

/// Andrew's monotone chain; collinear boundary points are dropped.
pub fn convex_hull<T: Scalar>(points: &[Point2<T>]) -> Result<ConvexPolygon<T>> {
    let mut pts: Vec<Point2<T>> = points.to_vec();
    if let Some(p) = pts.iter().find(|p| !p.is_finite()) {
        return Err(Error::DegenerateInput(format!("non-finite point {p:?}")));
    }
    pts.sort_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .unwrap()
            .then_with(|| a.y.partial_cmp(&b.y).unwrap())
    });
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(format!("{} distinct points", pts.len())));
    }
    let turn = |o: &Point2<T>, a: &Point2<T>, b: &Point2<T>| (a - o).cross(&(b - o));
    let mut hull: Vec<Point2<T>> = Vec::with_capacity(2 * pts.len());
    for p in pts.iter() {
        while hull.len() >= 2 && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= T::zero() {
            hull.pop();
        }
        hull.push(p.clone());
    }
    let lower = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= T::zero()
        {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull.pop();
    // In floating point the edge-based turn used by validation can disagree
    // with the one above on nearly collinear triples; prune those as well.
    while hull.len() >= 3 {
        let n = hull.len();
        let flat = (0..n).find(|&i| {
            let (a, b, c) = (&hull[(i + n - 1) % n], &hull[i], &hull[(i + 1) % n]);
            (b - a).cross(&(c - b)) <= T::zero()
        });
        match flat {
            Some(i) => {
                hull.remove(i);
            }
            None => break,
        }
    }
    if hull.len() < 3 {
        return Err(Error::DegenerateInput("all points collinear".into()));
    }
    ConvexPolygon::new(hull)
}

/// Shoelace area.
pub fn polygon_area<T: Scalar>(poly: &ConvexPolygon<T>) -> T {
    twice_signed_area(&poly.vertices) / (T::one() + T::one())
}

/// Whether `p` lies within `tol · diam(poly)` of every edge half-plane.
///
/// `tol = 0` is an exact test with the rational backend.
pub fn contains_point<T: Scalar>(poly: &ConvexPolygon<T>, p: &Point2<T>, tol: &T) -> bool {
    if tol.is_zero() {
        return poly.edges().all(|(a, b)| (b - a).cross(&(p - a)) >= T::zero());
    }
    let slack = tol.to_f64() * poly.diameter();
    let pf = p.to_f64();
    poly.edges().all(|(a, b)| {
        let (a, b) = (a.to_f64(), b.to_f64());
        let e = &b - &a;
        e.cross(&(&pf - &a)) >= -slack * e.norm()
    })
}

/// Every vertex of `inner` passes [`contains_point`] on `outer`.
pub fn contains_polygon<T: Scalar>(outer: &ConvexPolygon<T>, inner: &ConvexPolygon<T>, tol: &T) -> bool {
    inner.vertices.iter().all(|p| contains_point(outer, p, tol))
}

/// Intersection with the closed half-plane `side` of `line`.
pub fn halfplane_clip<T: Scalar>(
    poly: &ConvexPolygon<T>,
    line: &Line2<T>,
    side: Side,
) -> Result<ConvexPolygon<T>> {
    let value = |p: &Point2<T>| match side {
        Side::Below => line.eval(p),
        Side::Above => -line.eval(p),
    };
    let mut kept = Vec::with_capacity(poly.len() + 2);
    for (a, b) in poly.edges() {
        let (fa, fb) = (value(a), value(b));
        if fa <= T::zero() {
            kept.push(a.clone());
        }
        if (fa < T::zero() && fb > T::zero()) || (fa > T::zero() && fb < T::zero()) {
            let s = fa.clone() / (fa - fb);
            kept.push(a + &(b - a).scale(&s));
        }
    }
    convex_hull(&kept).map_err(|_| Error::EmptyResult)
}

/// `min { ‖p − q‖∞ : q ∈ poly }`, exact with rational coordinates.
///
/// The optimum is attained either at a vertex of the polygon or where a corner
/// of the growing square `p + ρ·B∞` first touches an edge.
pub fn linf_distance_to_polygon<T: Scalar>(p: &Point2<T>, poly: &ConvexPolygon<T>) -> T {
    if contains_point(poly, p, &T::zero()) {
        return T::zero();
    }
    let mut best: Option<T> = None;
    let mut offer = |d: T| {
        if best.as_ref().is_none_or(|b| d < *b) {
            best = Some(d);
        }
    };
    for v in poly.vertices() {
        offer((v - p).linf_norm());
    }
    let one = T::one();
    let diagonals = [
        Point2::new(one.clone(), one.clone()),
        Point2::new(-one.clone(), one.clone()),
        Point2::new(-one.clone(), -one.clone()),
        Point2::new(one.clone(), -one),
    ];
    for (a, b) in poly.edges() {
        let e = b - a;
        let w = a - p;
        for d in &diagonals {
            let den = d.cross(&e);
            if den.is_zero() {
                continue;
            }
            let s = w.cross(&e) / den.clone();
            let u = w.cross(d) / den;
            if s >= T::zero() && u >= T::zero() && u <= T::one() {
                offer(s);
            }
        }
    }
    best.expect("polygon has vertices")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, Rational};

    fn pt(x: i64, y: i64) -> Point2<Rational> {
        Point2::new(rat(x, 1), rat(y, 1))
    }

    #[test]
    fn float_hull_of_nearly_collinear_points_validates() {
        // contacts on the lines through (1, -1) from a normalized pentagon scene
        let pts = [
            Point2::new(1.0, 1.0),
            Point2::new(-1.0, 1.0),
            Point2::new(-1.0, -1.0),
            Point2::new(1.0, -1.0),
            Point2::new(-1.3147573033330529, -0.8426213483334736),
            Point2::new(0.3333333333333336, -1.6666666666666667),
            Point2::new(1.6666666666666672, -0.33333333333333315),
            Point2::new(0.8426213483334735, 1.3147573033330537),
        ];
        let hull = convex_hull(&pts).unwrap();
        assert!(ConvexPolygon::new(hull.vertices().to_vec()).is_ok());
    }

    fn square(k: i64) -> ConvexPolygon<Rational> {
        convex_hull(&[pt(k, k), pt(-k, k), pt(-k, -k), pt(k, -k)]).unwrap()
    }

    fn diamond() -> ConvexPolygon<Rational> {
        convex_hull(&[pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)]).unwrap()
    }

    #[test]
    fn hull_of_square_corners() {
        let hull = square(1);
        assert_eq!(hull.len(), 4);
        let expected = [pt(1, 1), pt(-1, 1), pt(-1, -1), pt(1, -1)];
        for v in expected {
            assert!(hull.vertices().contains(&v));
        }
        assert!(polygon_area(&hull) > rat(0, 1));
    }

    #[test]
    fn hull_drops_interior_and_collinear_points() {
        let hull = convex_hull(&[pt(1, 1), pt(-1, 1), pt(-1, -1), pt(1, -1), pt(0, 0), pt(1, 0), pt(1, 1)])
            .unwrap();
        assert_eq!(hull, square(1));
    }

    #[test]
    fn hull_rejects_degenerate_sets() {
        assert!(matches!(convex_hull(&[pt(0, 0), pt(1, 1), pt(2, 2)]), Err(Error::DegenerateInput(_))));
        assert!(matches!(convex_hull(&[pt(0, 0), pt(1, 1), pt(0, 0)]), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn new_rejects_bad_cycles() {
        assert!(ConvexPolygon::new(vec![pt(1, -1), pt(1, 1), pt(-1, 1), pt(-1, -1)]).is_ok());
        // clockwise
        assert!(ConvexPolygon::new(vec![pt(1, 1), pt(1, -1), pt(-1, -1), pt(-1, 1)]).is_err());
        // collinear middle vertex
        assert!(ConvexPolygon::new(vec![pt(-1, -1), pt(0, -1), pt(1, -1), pt(1, 1), pt(-1, 1)]).is_err());
        // pentagram: every turn is left but it winds twice
        let star: Vec<Point2<f64>> = (0..5)
            .map(|k| {
                let a = std::f64::consts::TAU * (2 * k) as f64 / 5.0;
                Point2::new(a.cos(), a.sin())
            })
            .collect();
        assert!(ConvexPolygon::new(star).is_err());
    }

    #[test]
    fn areas() {
        assert_eq!(square(1).area(), rat(4, 1));
        assert_eq!(diamond().area(), rat(2, 1));
        let pentagon: Vec<Point2<f64>> = (0..5)
            .map(|k| {
                let a = std::f64::consts::TAU * k as f64 / 5.0;
                Point2::new(a.cos(), a.sin())
            })
            .collect();
        let area = convex_hull(&pentagon).unwrap().area();
        let expected = 2.5 * (72f64).to_radians().sin();
        assert!((area - expected).abs() < 1e-14);
    }

    #[test]
    fn point_containment() {
        let sq = square(1);
        let zero = rat(0, 1);
        assert!(contains_point(&sq, &pt(0, 0), &zero));
        assert!(contains_point(&sq, &pt(1, 1), &zero));
        let outside = Point2::new(rat(1, 1) + rat(1, 1_000_000_000_000), rat(0, 1));
        assert!(!contains_point(&sq, &outside, &zero));
        // relative tolerance: 1e-12 outside a diameter-2√2 polygon passes at tol 1e-9
        assert!(contains_point(&sq, &outside, &rat(1, 1_000_000_000)));
    }

    #[test]
    fn polygon_containment() {
        let zero = rat(0, 1);
        assert!(contains_polygon(&square(2), &square(1), &zero));
        assert!(!contains_polygon(&square(1), &square(2), &zero));
    }

    #[test]
    fn clipping() {
        let sq = square(1);
        let left = halfplane_clip(&sq, &Line2::vertical(rat(0, 1)), Side::Below).unwrap();
        assert_eq!(left.area(), rat(2, 1));
        let miss = halfplane_clip(&sq, &Line2::vertical(rat(5, 1)), Side::Below).unwrap();
        assert_eq!(miss, sq);
        let corner = Line2::new(rat(1, 1), rat(1, 1), rat(1, 1)).unwrap();
        let pentagon = halfplane_clip(&sq, &corner, Side::Below).unwrap();
        assert_eq!(pentagon.len(), 5);
        assert_eq!(pentagon.area(), rat(7, 2));
        let right = halfplane_clip(&sq, &Line2::vertical(rat(0, 1)), Side::Above).unwrap();
        assert_eq!(right.area(), rat(2, 1));
        assert_eq!(
            halfplane_clip(&sq, &Line2::vertical(rat(-1, 1)), Side::Below),
            Err(Error::EmptyResult)
        );
    }

    #[test]
    fn linf_distances() {
        assert_eq!(linf_distance_to_polygon(&pt(0, 0), &square(1)), rat(0, 1));
        assert_eq!(linf_distance_to_polygon(&pt(3, 0), &square(1)), rat(2, 1));
        // corner of the growing square touches the edge x + y = 1
        assert_eq!(linf_distance_to_polygon(&pt(2, 2), &diamond()), rat(3, 2));
    }

    #[test]
    fn linf_distance_matches_grid_sampling() {
        // Dense sampling of the diamond; the minimum over samples converges from above.
        let p = Point2::new(2.0, 2.0);
        let n = 2000;
        let mut best = f64::INFINITY;
        for i in 0..=n {
            for j in 0..=n {
                let (s, t) = (i as f64 / n as f64, j as f64 / n as f64);
                // bilinear parametrization of the diamond from its four corners
                let x = (1.0 - s) * (1.0 - t) * 1.0 + s * (1.0 - t) * 0.0 + s * t * -1.0 + (1.0 - s) * t * 0.0;
                let y = (1.0 - s) * (1.0 - t) * 0.0 + s * (1.0 - t) * 1.0 + s * t * 0.0 + (1.0 - s) * t * -1.0;
                best = best.min((x - p.x).abs().max((y - p.y).abs()));
            }
        }
        let exact = linf_distance_to_polygon(&p, &diamond().to_f64());
        assert!((best - exact).abs() < 1e-6, "{best} vs {exact}");
    }
}
