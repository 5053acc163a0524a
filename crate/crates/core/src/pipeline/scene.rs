//! Affine normalization to the unit square, the contact box and the octagon.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{contains_point, contains_polygon, convex_hull, AffineMap2, ConvexPolygon, Point2};
use crate::minquad::Quadrilateral;
use crate::num::Scalar;

/// The square `conv{(±1, ±1)}`.
pub fn unit_square<T: Scalar>() -> ConvexPolygon<T> {
    let one = T::one;
    ConvexPolygon::new(vec![
        Point2::new(one(), one()),
        Point2::new(-one(), one()),
        Point2::new(-one(), -one()),
        Point2::new(one(), -one()),
    ])
    .expect("square is convex")
}

/// Body and quadrilateral after mapping the Varignon parallelogram to the square.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalizedScene<T> {
    pub body: ConvexPolygon<T>,
    pub quad: Quadrilateral<T>,
    /// Original coordinates to normalized coordinates.
    pub map: AffineMap2<T>,
}

/// Map sending the edge midpoints `m0, m1, m2, m3` of `quad` to
/// `(1, −1), (1, 1), (−1, 1), (−1, −1)`.
pub fn normalize_to_square<T: Scalar>(
    body: &ConvexPolygon<T>,
    quad: &Quadrilateral<T>,
) -> Result<(NormalizedScene<T>, AffineMap2<T>)> {
    let m: Vec<Point2<T>> = (0..4).map(|i| quad.edge_midpoint(i)).collect();
    if (&m[1] - &m[0]).cross(&(&m[2] - &m[0])).is_zero() {
        return Err(Error::DegenerateParallelogram);
    }
    let one = T::one;
    let targets = [Point2::new(one(), -one()), Point2::new(one(), one()), Point2::new(-one(), one())];
    let map = AffineMap2::from_triangles([&m[0], &m[1], &m[2]], [&targets[0], &targets[1], &targets[2]])
        .map_err(|_| Error::DegenerateParallelogram)?;
    let scene = NormalizedScene { body: body.apply_affine(&map)?, quad: quad.apply_affine(&map)?, map: map.clone() };
    Ok((scene, map))
}

/// Axis-parallel bounding box of the normalized body with one contact vertex per side.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContactBox<T> {
    pub a1: T,
    pub a2: T,
    pub b1: T,
    pub b2: T,
    /// Contact on `x = a1`.
    pub v1: Point2<T>,
    /// Contact on `y = a2`.
    pub v2: Point2<T>,
    /// Contact on `x = b1`.
    pub w1: Point2<T>,
    /// Contact on `y = b2`.
    pub w2: Point2<T>,
    pub x: T,
    pub y: T,
}

impl<T: Scalar> ContactBox<T> {
    /// Box from four contacts; bounds and widths are read off the contacts.
    pub fn from_contacts(v1: Point2<T>, v2: Point2<T>, w1: Point2<T>, w2: Point2<T>) -> Self {
        let (a1, a2, b1, b2) = (v1.x.clone(), v2.y.clone(), w1.x.clone(), w2.y.clone());
        Self {
            x: b1.clone() - a1.clone(),
            y: b2.clone() - a2.clone(),
            a1,
            a2,
            b1,
            b2,
            v1,
            v2,
            w1,
            w2,
        }
    }

    pub fn area(&self) -> T {
        self.x.clone() * self.y.clone()
    }

    pub fn contacts(&self) -> [Point2<T>; 4] {
        [self.v1.clone(), self.v2.clone(), self.w1.clone(), self.w2.clone()]
    }

    pub fn to_f64(&self) -> ContactBox<f64> {
        ContactBox::from_contacts(self.v1.to_f64(), self.v2.to_f64(), self.w1.to_f64(), self.w2.to_f64())
    }
}

/// Extreme vertex along `key`; ties prefer the smallest `|other|`.
fn extreme<T: Scalar>(
    vertices: &[Point2<T>],
    key: impl Fn(&Point2<T>) -> T,
    other: impl Fn(&Point2<T>) -> T,
) -> Point2<T> {
    let mut best = &vertices[0];
    for v in &vertices[1..] {
        let (kv, kb) = (key(v), key(best));
        if kv > kb || (kv == kb && other(v).abs_val() < other(best).abs_val()) {
            best = v;
        }
    }
    best.clone()
}

/// Bounding box and contacts of a body normalized so that it contains the
/// square `conv{(±1, ±1)}`.
///
/// `tol` is an absolute slack in normalized coordinates for the checks
/// `a1, a2 ≤ −1` and `b1, b2 ≥ 1`.
pub fn axis_box_with_contacts<T: Scalar>(body: &ConvexPolygon<T>, tol: &T) -> Result<ContactBox<T>> {
    let vs = body.vertices();
    let v1 = extreme(vs, |p| -p.x.clone(), |p| p.y.clone());
    let v2 = extreme(vs, |p| -p.y.clone(), |p| p.x.clone());
    let w1 = extreme(vs, |p| p.x.clone(), |p| p.y.clone());
    let w2 = extreme(vs, |p| p.y.clone(), |p| p.x.clone());
    let b = ContactBox::from_contacts(v1, v2, w1, w2);
    let limit = T::one() - tol.clone();
    for (name, outward) in [("a1", -b.a1.clone()), ("a2", -b.a2.clone()), ("b1", b.b1.clone()), ("b2", b.b2.clone())] {
        if outward < limit {
            return Err(Error::NormalizationViolated(format!("|{name}| = {outward:?} < 1")));
        }
    }
    Ok(b)
}

/// Normalized configuration: square, contacts, octagon and its area.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OctagonScene<T> {
    pub square_p: ConvexPolygon<T>,
    pub contacts: ContactBox<T>,
    pub octagon: ConvexPolygon<T>,
    /// Shoelace area of the octagon.
    pub area_o: T,
    pub normalizing_map: AffineMap2<T>,
    pub body: ConvexPolygon<T>,
}

/// `conv(P ∪ contacts)` with the area identity `|octagon| = x + y` checked.
///
/// With `tol = 0` the identity and `octagon ⊆ body` are checked exactly;
/// otherwise both hold up to `tol` (relative).
pub fn build_octagon<T: Scalar>(
    body: &ConvexPolygon<T>,
    contacts: &ContactBox<T>,
    map: &AffineMap2<T>,
    tol: &T,
) -> Result<OctagonScene<T>> {
    let square: ConvexPolygon<T> = unit_square();
    let mut points = square.vertices().to_vec();
    points.extend(contacts.contacts());
    let octagon = convex_hull(&points)?;
    let area_o = octagon.area();
    let widths = contacts.x.clone() + contacts.y.clone();
    let gap = (area_o.clone() - widths.clone()).abs_val();
    let agrees = if tol.is_zero() { gap.is_zero() } else { gap <= tol.clone() * widths.clone() };
    if !agrees {
        return Err(Error::AreaIdentityViolated {
            shoelace: format!("{area_o:?}"),
            widths: format!("{widths:?}"),
        });
    }
    if !contains_polygon(body, &octagon, tol) {
        return Err(Error::NormalizationViolated("octagon is not inside the body".into()));
    }
    Ok(OctagonScene {
        square_p: square,
        contacts: contacts.clone(),
        octagon,
        area_o,
        normalizing_map: map.clone(),
        body: body.clone(),
    })
}

/// Whether the normalized body contains the square up to `tol` (relative).
pub fn contains_unit_square<T: Scalar>(body: &ConvexPolygon<T>, tol: &T) -> bool {
    unit_square::<T>().vertices().iter().all(|p| contains_point(body, p, tol))
}
