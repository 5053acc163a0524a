use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{convex_hull, AffineMap2, ConvexPolygon, Point2};
use crate::num::Scalar;

/// Four counterclockwise vertices.
///
/// A proper quadrilateral is strictly convex. The only admitted degenerate
/// form is a triangle with its last vertex repeated, used when the body
/// itself is a triangle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Quadrilateral<T> {
    vertices: [Point2<T>; 4],
    degenerate: bool,
}

impl<T: Scalar> Quadrilateral<T> {
    pub fn new(vertices: [Point2<T>; 4]) -> Result<Self> {
        ConvexPolygon::new(vertices.to_vec())?;
        Ok(Self { vertices, degenerate: false })
    }

    /// Skips validation; for exercising degenerate inputs downstream.
    #[doc(hidden)]
    pub fn from_vertices_unchecked(vertices: [Point2<T>; 4]) -> Self {
        Self { vertices, degenerate: false }
    }

    /// A triangle stored as `(a, b, c, c)` and flagged degenerate.
    pub fn degenerate_triangle(triangle: &ConvexPolygon<T>) -> Result<Self> {
        let v = triangle.vertices();
        if v.len() != 3 {
            return Err(Error::InvalidPolygon(format!("expected a triangle, got {} vertices", v.len())));
        }
        Ok(Self { vertices: [v[0].clone(), v[1].clone(), v[2].clone(), v[2].clone()], degenerate: true })
    }

    pub fn vertices(&self) -> &[Point2<T>; 4] {
        &self.vertices
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn to_polygon(&self) -> ConvexPolygon<T> {
        if self.degenerate {
            convex_hull(&self.vertices).expect("triangle is non-degenerate")
        } else {
            ConvexPolygon::new(self.vertices.to_vec()).expect("validated on construction")
        }
    }

    pub fn area(&self) -> T {
        self.to_polygon().area()
    }

    /// Midpoint of edge `i`, from vertex `i` to vertex `i + 1`.
    pub fn edge_midpoint(&self, i: usize) -> Point2<T> {
        self.vertices[i].midpoint(&self.vertices[(i + 1) % 4])
    }

    pub fn apply_affine(&self, map: &AffineMap2<T>) -> Result<Self> {
        let mut image = self.vertices.clone().map(|p| map.apply(&p));
        if map.det() < T::zero() {
            image.reverse();
            if self.degenerate {
                // keep the repeated vertex last
                image.rotate_left(2);
            }
        }
        if self.degenerate {
            Ok(Self { vertices: image, degenerate: true })
        } else {
            Self::new(image)
        }
    }

    pub fn scale(&self, k: &T) -> Result<Self> {
        let image = self.vertices.clone().map(|p| p.scale(k));
        if self.degenerate {
            Ok(Self { vertices: image, degenerate: true })
        } else {
            Self::new(image)
        }
    }

    pub fn to_f64(&self) -> Quadrilateral<f64> {
        Quadrilateral { vertices: self.vertices.clone().map(|p| p.to_f64()), degenerate: self.degenerate }
    }

    pub fn from_f64(q: &Quadrilateral<f64>) -> Result<Self> {
        let vertices = q.vertices.clone().map(|p| Point2::from_f64(&p));
        if q.degenerate {
            Ok(Self { vertices, degenerate: true })
        } else {
            Self::new(vertices)
        }
    }
}
