//! Planar convex geometry over either numeric backend.
//!
//! Every routine is generic over [`Scalar`](crate::num::Scalar): with
//! [`Rational`](crate::num::Rational) coordinates the predicates, areas and
//! affine images are exact, with `f64` they are the usual floating versions.

mod affine;
mod line;
mod point;
mod polygon;

pub use affine::AffineMap2;
pub use line::{line_intersection, Line2, Side};
pub use point::Point2;
pub use polygon::{
    contains_point, contains_polygon, convex_hull, halfplane_clip, linf_distance_to_polygon,
    polygon_area, ConvexPolygon,
};
