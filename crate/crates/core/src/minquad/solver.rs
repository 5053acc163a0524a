use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{AffineMap2, ConvexPolygon, Point2};
use crate::minquad::support::{corner, normalize_angle, SupportFunction};
use crate::minquad::{midpoint_certificate, CircumscriptionCertificate, Quadrilateral};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverOptions {
    /// Uniform angle samples over the full circle for the multi-start grid.
    pub coarse_grid: usize,
    /// Maximum number of coordinate-descent sweeps per start.
    pub refine_iters: usize,
    /// Relative tolerance: descent stops once a sweep gains less than `tol·|K|`.
    pub tol: f64,
    /// Phase of the coarse grid.
    pub seed: u64,
    /// Number of grid candidates refined by coordinate descent.
    pub starts: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { coarse_grid: 90, refine_iters: 500, tol: 1e-9, seed: 0, starts: 16 }
    }
}

impl SolverOptions {
    pub fn validate(&self) -> Result<()> {
        if self.coarse_grid < 8 {
            return Err(Error::BadParams(format!("coarse_grid = {} < 8", self.coarse_grid)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::BadParams(format!("tol = {} must be positive", self.tol)));
        }
        if self.starts == 0 {
            return Err(Error::BadParams("starts must be positive".into()));
        }
        Ok(())
    }
}

/// Solver output with the support angles it settled on.
#[derive(Clone, Debug)]
pub struct Solution {
    pub quad: Quadrilateral<f64>,
    pub certificate: CircumscriptionCertificate<f64>,
    /// Outward normal angles of the four sides (empty for a triangle body).
    pub angles: Vec<f64>,
}

/// Minimum-area circumscribed quadrilateral with its optimality certificate.
pub fn min_circumscribed_quadrilateral(
    body: &ConvexPolygon<f64>,
    opts: &SolverOptions,
) -> Result<(Quadrilateral<f64>, CircumscriptionCertificate<f64>)> {
    let s = solve(body, opts)?;
    Ok((s.quad, s.certificate))
}

/// Coarse-grid multi-start followed by cyclic coordinate descent on the angles.
pub fn solve(body: &ConvexPolygon<f64>, opts: &SolverOptions) -> Result<Solution> {
    opts.validate()?;
    let area = body.area();
    let diam = body.diameter();
    if !(area > 1e-12 * diam * diam) {
        return Err(Error::DegenerateBody(format!("area {area:e} for diameter {diam:e}")));
    }
    if body.len() == 3 {
        let quad = Quadrilateral::degenerate_triangle(body)?;
        let certificate = midpoint_certificate(body, &quad, &opts.tol);
        return Ok(Solution { quad, certificate, angles: Vec::new() });
    }

    // Work on a centered copy to keep the support values small.
    let n = body.len() as f64;
    let cx = body.vertices().iter().map(|p| p.x).sum::<f64>() / n;
    let cy = body.vertices().iter().map(|p| p.y).sum::<f64>() / n;
    let centered = body.apply_affine(&AffineMap2::translation(-cx, -cy))?;
    let problem = Problem::new(&centered);

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let phase = if opts.seed == 0 { 0.0 } else { rng.gen::<f64>() * TAU / opts.coarse_grid as f64 };
    let starts = problem.grid_starts(opts.coarse_grid, phase, opts.starts);
    if starts.is_empty() {
        return Err(Error::SolverFailure("no feasible grid quadruple".into()));
    }

    let stop = opts.tol * area;
    let mut best: Option<([f64; 4], f64, Quadrilateral<f64>)> = None;
    for start in starts {
        let (angles, value) = problem.descend(start, opts.refine_iters, stop);
        let angles = canonical(angles);
        // Descent may collapse a side onto a neighbour; such triangles are
        // never minimal for a body with more than three vertices.
        let Some(quad) = problem
            .corners(&angles)
            .and_then(|c| Quadrilateral::new(c.map(|p| Point2::new(p.x + cx, p.y + cy))).ok())
        else {
            continue;
        };
        let better = match &best {
            None => true,
            Some((best_angles, best_value, _)) => {
                value < best_value - stop
                    || (value <= best_value + stop && lexicographic_less(&angles, best_angles))
            }
        };
        if better {
            best = Some((angles, value, quad));
        }
    }
    let (angles, _, quad) =
        best.ok_or_else(|| Error::SolverFailure("every start collapsed to a degenerate quadrilateral".into()))?;
    let certificate = midpoint_certificate(body, &quad, &opts.tol);
    if !certificate.contains_k {
        return Err(Error::SolverFailure("solver output does not contain the body".into()));
    }
    Ok(Solution { quad, certificate, angles: angles.to_vec() })
}

fn lexicographic_less(a: &[f64; 4], b: &[f64; 4]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x < y;
        }
    }
    false
}

/// Rotates labels so that `θ0 ∈ [0, 2π)` is the smallest normalized angle and
/// the others follow counterclockwise.
fn canonical(angles: [f64; 4]) -> [f64; 4] {
    let normalized = angles.map(normalize_angle);
    let first = (0..4)
        .min_by(|&i, &j| normalized[i].total_cmp(&normalized[j]))
        .unwrap();
    let mut out = [0.0; 4];
    for k in 0..4 {
        let mut t = normalized[(first + k) % 4];
        if k > 0 && t < out[0] {
            t += TAU;
        }
        out[k] = t;
    }
    out
}

/// Smallest angular gap between consecutive sides treated as a proper corner.
const MIN_GAP: f64 = 1e-9;

struct Problem {
    support: SupportFunction,
}

impl Problem {
    fn new(body: &ConvexPolygon<f64>) -> Self {
        Self { support: SupportFunction::new(body) }
    }

    fn corners(&self, angles: &[f64; 4]) -> Option<[Point2<f64>; 4]> {
        let h = angles.map(|t| self.support.value(t));
        let mut out = [Point2::new(0.0, 0.0), Point2::new(0.0, 0.0), Point2::new(0.0, 0.0), Point2::new(0.0, 0.0)];
        for i in 0..4 {
            let j = (i + 1) % 4;
            out[i] = corner(angles[i], h[i], angles[j], h[j])?;
        }
        Some(out)
    }

    /// Area of the quadrilateral cut out by the four supporting lines, or
    /// `None` when the angles do not bound a region.
    fn area(&self, angles: &[f64; 4]) -> Option<f64> {
        for i in 0..4 {
            let gap = if i < 3 { angles[i + 1] - angles[i] } else { angles[0] + TAU - angles[3] };
            if !(gap > MIN_GAP && gap < PI - MIN_GAP) {
                return None;
            }
        }
        let c = self.corners(angles)?;
        let twice: f64 = (0..4).map(|i| c[i].cross(&c[(i + 1) % 4])).sum();
        Some(0.5 * twice)
    }

    /// Candidate directions: a uniform grid plus every edge normal of the body,
    /// so that quadrilaterals flush with body edges are represented exactly.
    fn candidate_angles(&self, grid: usize, phase: f64) -> Vec<f64> {
        let mut angles: Vec<f64> = (0..grid)
            .map(|k| normalize_angle(phase + TAU * k as f64 / grid as f64))
            .chain(self.support.breakpoints_between(-1e-300, TAU - 1e-300))
            .map(normalize_angle)
            .collect();
        angles.sort_by(f64::total_cmp);
        angles.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
        angles
    }

    /// Best quadruples over the candidate directions, one per first side,
    /// found by a min-plus product over the pairwise area decomposition
    /// `|Q| = Σ g(θi, θi+1)`.
    fn grid_starts(&self, grid: usize, phase: f64, count: usize) -> Vec<[f64; 4]> {
        let cand = self.candidate_angles(grid, phase);
        let m = cand.len();
        let angle = |k: usize| cand[k % m] + TAU * (k / m) as f64;
        let h: Vec<f64> = cand.iter().map(|&t| self.support.value(t)).collect();
        // pair[i][s]: contribution of the corner between directions i and i + s
        let mut pair = vec![vec![f64::INFINITY; m]; m];
        for (i, row) in pair.iter_mut().enumerate() {
            let (ti, hi) = (cand[i], h[i]);
            for (s, slot) in row.iter_mut().enumerate().skip(1) {
                let tj = angle(i + s);
                if tj - ti >= PI {
                    break;
                }
                let j = (i + s) % m;
                if let Some(v) = corner(ti, hi, tj, h[j]) {
                    let si = -v.x * ti.sin() + v.y * ti.cos();
                    let sj = -v.x * tj.sin() + v.y * tj.cos();
                    *slot = 0.5 * (hi * si - h[j] * sj);
                }
            }
        }
        // two[i][k]: best path i → i + s → i + k, with its middle step s
        let mut two = vec![vec![(f64::INFINITY, 0usize); m]; m];
        for i in 0..m {
            for k in 2..m {
                let mut best = (f64::INFINITY, 0);
                for s in 1..k {
                    let v = pair[i][s] + pair[(i + s) % m][k - s];
                    if v < best.0 {
                        best = (v, s);
                    }
                }
                two[i][k] = best;
            }
        }
        let mut candidates: Vec<(f64, [usize; 4])> = Vec::new();
        for a in 0..m {
            let mut best: Option<(f64, [usize; 4])> = None;
            for k in 2..m.saturating_sub(1) {
                let (first, s1) = two[a][k];
                let (second, s2) = two[(a + k) % m][m - k];
                let v = first + second;
                if v.is_finite() && best.is_none_or(|b| v < b.0) {
                    best = Some((v, [a, a + s1, a + k, a + k + s2]));
                }
            }
            if let Some(b) = best {
                candidates.push(b);
            }
        }
        candidates.sort_by(|x, y| x.0.total_cmp(&y.0).then_with(|| x.1.cmp(&y.1)));
        let mut out: Vec<[f64; 4]> = Vec::new();
        let mut seen: Vec<[usize; 4]> = Vec::new();
        for (_, idx) in candidates {
            let mut key = idx.map(|k| k % m);
            key.sort_unstable();
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            out.push(idx.map(angle));
            if out.len() == count {
                break;
            }
        }
        out
    }

    /// Cyclic coordinate descent; each step minimizes the area exactly over
    /// one angle with the other three fixed.
    fn descend(&self, mut angles: [f64; 4], max_sweeps: usize, stop: f64) -> ([f64; 4], f64) {
        let mut value = self.area(&angles).unwrap_or(f64::INFINITY);
        for _ in 0..max_sweeps {
            let before = value;
            for i in 0..4 {
                let (t, v) = self.line_search(&angles, i, value);
                angles[i] = t;
                value = v;
            }
            if before - value < stop {
                break;
            }
        }
        (angles, value)
    }

    /// Exact one-dimensional minimization over side `i`.
    ///
    /// Between consecutive edge normals of the body the side pivots about a
    /// fixed vertex `p`; there the area is smooth with its only stationary
    /// point where `p` bisects the side. Candidates are therefore the
    /// breakpoints and those bisecting angles.
    fn line_search(&self, angles: &[f64; 4], i: usize, current: f64) -> (f64, f64) {
        let prev = if i == 0 { angles[3] - TAU } else { angles[i - 1] };
        let next = if i == 3 { angles[0] + TAU } else { angles[i + 1] };
        let lo = prev.max(next - PI) + MIN_GAP;
        let hi = next.min(prev + PI) - MIN_GAP;
        let mut best = (angles[i], current);
        if !(hi > lo) {
            return best;
        }
        let mut trial = *angles;
        let mut consider = |t: f64, best: &mut (f64, f64)| {
            if !(t > lo && t < hi) {
                return;
            }
            trial[i] = t;
            if let Some(v) = self.area(&trial) {
                if v < best.1 {
                    *best = (t, v);
                }
            }
        };
        let breaks = self.support.breakpoints_between(lo, hi);
        for &t in &breaks {
            consider(t, &mut best);
        }
        let (hp, hn) = (self.support.value(prev), self.support.value(next));
        let mut edges = Vec::with_capacity(breaks.len() + 2);
        edges.push(lo);
        edges.extend_from_slice(&breaks);
        edges.push(hi);
        for w in edges.windows(2) {
            let mid = 0.5 * (w[0] + w[1]);
            let p = self.support.support_point(mid);
            if let Some(t) = bisecting_angle(prev, hp, next, hn, p, w[0], w[1]) {
                consider(t, &mut best);
            }
        }
        best
    }
}

/// Normal angle in `[lo, hi]` of the line through `p` whose segment between
/// the lines `(prev, hp)` and `(next, hn)` has `p` as its midpoint.
fn bisecting_angle(prev: f64, hp: f64, next: f64, hn: f64, p: &Point2<f64>, lo: f64, hi: f64) -> Option<f64> {
    // A on the previous line, B = 2p − A on the next one.
    let (np, nn) = ((prev.cos(), prev.sin()), (next.cos(), next.sin()));
    let rhs = 2.0 * (nn.0 * p.x + nn.1 * p.y) - hn;
    let det = np.0 * nn.1 - np.1 * nn.0;
    if det.abs() < 1e-15 {
        return None;
    }
    let ax = (hp * nn.1 - rhs * np.1) / det;
    let ay = (np.0 * rhs - nn.0 * hp) / det;
    let (dx, dy) = (2.0 * (p.x - ax), 2.0 * (p.y - ay));
    if dx == 0.0 && dy == 0.0 {
        return None;
    }
    let t = (-dx).atan2(dy);
    // unwrap into the window
    let t = t + TAU * ((0.5 * (lo + hi) - t) / TAU).round();
    (t >= lo && t <= hi).then_some(t)
}
