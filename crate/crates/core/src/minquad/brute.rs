use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geom::{line_intersection, ConvexPolygon, Line2, Point2};
use crate::minquad::Quadrilateral;

/// Exhaustive minimum over all quadruples `θ1 < θ2 < θ3 < θ4` of a uniform
/// grid of `grid` angles on `[0, 2π)`.
///
/// Each side is the supporting line of the body in its direction (support
/// values by scanning every vertex); consecutive lines are intersected and
/// the smallest proper quadrilateral wins, earliest quadruple on ties.
pub fn brute_force_min_quad(body: &ConvexPolygon<f64>, grid: usize) -> Result<Quadrilateral<f64>> {
    if grid < 16 {
        return Err(Error::BadParams(format!("grid = {grid} < 16")));
    }
    let lines: Vec<Line2<f64>> = (0..grid)
        .map(|k| {
            let t = TAU * k as f64 / grid as f64;
            let (s, c) = t.sin_cos();
            let h = body.vertices().iter().map(|p| c * p.x + s * p.y).fold(f64::NEG_INFINITY, f64::max);
            Line2 { a: c, b: s, c: h }
        })
        .collect();
    // Two grid directions bound a wedge only when less than half a turn apart.
    let half = |steps: usize| 2 * steps < grid;
    let mut corner: Vec<Vec<Option<Point2<f64>>>> = vec![vec![None; grid]; grid];
    for i in 0..grid {
        for step in 1..grid {
            if half(step) {
                let j = (i + step) % grid;
                corner[i][j] = line_intersection(&lines[i], &lines[j]).ok();
            }
        }
    }
    let mut best: Option<(f64, [Point2<f64>; 4])> = None;
    for a in 0..grid {
        for b in a + 1..grid {
            if !half(b - a) {
                break;
            }
            let Some(p0) = &corner[a][b] else { continue };
            for c in b + 1..grid {
                if !half(c - b) {
                    break;
                }
                let Some(p1) = &corner[b][c] else { continue };
                for d in c + 1..grid {
                    if !half(d - c) {
                        break;
                    }
                    if !half(a + grid - d) {
                        continue;
                    }
                    let (Some(p2), Some(p3)) = (&corner[c][d], &corner[d][a]) else { continue };
                    let area = 0.5 * (p0.cross(p1) + p1.cross(p2) + p2.cross(p3) + p3.cross(p0));
                    if best.as_ref().is_none_or(|(v, _)| area < *v) {
                        let pts = [p3.clone(), p0.clone(), p1.clone(), p2.clone()];
                        if Quadrilateral::new(pts.clone()).is_ok() {
                            best = Some((area, pts));
                        }
                    }
                }
            }
        }
    }
    let (_, pts) = best.ok_or(Error::NoFeasibleQuadruple)?;
    Quadrilateral::new(pts)
}
