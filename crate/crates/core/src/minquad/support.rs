use std::f64::consts::TAU;

use crate::geom::{ConvexPolygon, Point2};

/// Support function `h(θ) = max_{p ∈ K} ⟨(cos θ, sin θ), p⟩` of a convex polygon.
///
/// Edge `j` (from vertex `j` to `j + 1`) has outward normal angle `φ_j`;
/// vertex `j` is the support point for `θ ∈ [φ_{j−1}, φ_j]`.
#[derive(Clone, Debug)]
pub struct SupportFunction {
    vertices: Vec<Point2<f64>>,
    /// `(φ, edge index)` sorted by `φ ∈ [0, 2π)`.
    normals: Vec<(f64, usize)>,
}

impl SupportFunction {
    pub fn new(body: &ConvexPolygon<f64>) -> Self {
        let vertices = body.vertices().to_vec();
        let n = vertices.len();
        let mut normals: Vec<(f64, usize)> = (0..n)
            .map(|j| {
                let e = &vertices[(j + 1) % n] - &vertices[j];
                (normalize_angle((-e.x).atan2(e.y)), j)
            })
            .collect();
        normals.sort_by(|a, b| a.0.total_cmp(&b.0));
        Self { vertices, normals }
    }

    pub fn vertices(&self) -> &[Point2<f64>] {
        &self.vertices
    }

    /// Index of a support vertex for direction `θ`.
    pub fn support_index(&self, theta: f64) -> usize {
        let t = normalize_angle(theta);
        // first edge normal at or after θ; its start vertex supports θ
        let k = self.normals.partition_point(|&(phi, _)| phi < t);
        let (_, edge) = self.normals[k % self.normals.len()];
        edge
    }

    pub fn support_point(&self, theta: f64) -> &Point2<f64> {
        &self.vertices[self.support_index(theta)]
    }

    pub fn value(&self, theta: f64) -> f64 {
        let p = self.support_point(theta);
        theta.cos() * p.x + theta.sin() * p.y
    }

    /// Edge normal angles in the open interval `(lo, hi)`, `hi − lo < 2π`,
    /// returned unwrapped into that interval in increasing order.
    pub fn breakpoints_between(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut out = Vec::new();
        let base = (lo / TAU).floor() * TAU;
        for shift in [0.0, TAU] {
            for &(phi, _) in &self.normals {
                let t = base + shift + phi;
                if t > lo && t < hi {
                    out.push(t);
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out
    }
}

/// Maps an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Supporting line `⟨n(θ), x⟩ = h(θ)` of consecutive sides meet here.
pub fn corner(theta_i: f64, h_i: f64, theta_j: f64, h_j: f64) -> Option<Point2<f64>> {
    let det = (theta_j - theta_i).sin();
    if det.abs() < 1e-15 {
        return None;
    }
    let (si, ci) = theta_i.sin_cos();
    let (sj, cj) = theta_j.sin_cos();
    Some(Point2::new((h_i * sj - h_j * si) / det, (ci * h_j - cj * h_i) / det))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn square() -> ConvexPolygon<f64> {
        ConvexPolygon::from_points(&[
            Point2::new(1.0, 1.0),
            Point2::new(-1.0, 1.0),
            Point2::new(-1.0, -1.0),
            Point2::new(1.0, -1.0),
        ])
        .unwrap()
    }

    #[test]
    fn support_of_square() {
        let h = SupportFunction::new(&square());
        assert!((h.value(0.0) - 1.0).abs() < 1e-15);
        assert!((h.value(PI / 4.0) - 2f64.sqrt()).abs() < 1e-15);
        assert!((h.value(-3.0 * PI / 4.0) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(*h.support_point(PI / 4.0), Point2::new(1.0, 1.0));
        assert_eq!(h.breakpoints_between(-0.1, 2.0).len(), 2);
    }

    #[test]
    fn support_matches_brute_force() {
        let pts: Vec<Point2<f64>> = (0..7)
            .map(|k| {
                let a = 0.3 + TAU * k as f64 / 7.0 + 0.1 * (k as f64).sin();
                Point2::new(2.0 * a.cos() + 0.5, a.sin() - 0.25)
            })
            .collect();
        let body = ConvexPolygon::from_points(&pts).unwrap();
        let h = SupportFunction::new(&body);
        for i in 0..1000 {
            let t = -7.0 + 14.0 * i as f64 / 1000.0;
            let brute = body
                .vertices()
                .iter()
                .map(|p| t.cos() * p.x + t.sin() * p.y)
                .fold(f64::NEG_INFINITY, f64::max);
            assert!((h.value(t) - brute).abs() < 1e-12);
        }
    }

    #[test]
    fn corners_of_axis_lines() {
        let p = corner(0.0, 1.0, PI / 2.0, 2.0).unwrap();
        assert!((p.x - 1.0).abs() < 1e-15 && (p.y - 2.0).abs() < 1e-15);
        assert!(corner(0.0, 1.0, PI, 1.0).is_none());
    }
}
