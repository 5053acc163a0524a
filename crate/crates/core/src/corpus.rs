//! Seeded generators for test and benchmark bodies.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{AffineMap2, ConvexPolygon, Point2};
use crate::num::{Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusKind {
    /// Hull of uniform points in the unit disk.
    Random,
    /// Regular polygon with rational vertex coordinates.
    RegularKGon,
    /// Polygon inscribed in an ellipse, then affinely distorted.
    Ellipse,
    /// Regular pentagon under a random invertible affine map.
    AffinePentagon,
}

impl CorpusKind {
    pub fn name(&self) -> &'static str {
        match self {
            CorpusKind::Random => "random",
            CorpusKind::RegularKGon => "regular_k_gon",
            CorpusKind::Ellipse => "ellipse",
            CorpusKind::AffinePentagon => "affine_pentagon",
        }
    }
}

impl fmt::Display for CorpusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorpusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(CorpusKind::Random),
            "regular_k_gon" | "regular" | "kgon" => Ok(CorpusKind::RegularKGon),
            "ellipse" => Ok(CorpusKind::Ellipse),
            "affine_pentagon" | "pentagon" => Ok(CorpusKind::AffinePentagon),
            other => Err(Error::BadParams(format!("unknown corpus kind {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub kind: CorpusKind,
    pub count: usize,
    pub seed: u64,
    /// Sample points (random), polygon size (regular, ellipse); ignored for pentagons.
    pub vertices: usize,
}

impl CorpusSpec {
    pub fn new(kind: CorpusKind, count: usize, seed: u64, vertices: usize) -> Self {
        Self { kind, count, seed, vertices }
    }

    pub fn validate(&self) -> Result<()> {
        let min = match self.kind {
            CorpusKind::AffinePentagon => 0,
            _ => 3,
        };
        if self.vertices < min {
            return Err(Error::BadParams(format!("{} needs at least {min} vertices", self.kind)));
        }
        if self.kind == CorpusKind::RegularKGon && self.vertices > 100_000 {
            return Err(Error::BadParams("regular_k_gon with too many vertices".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct GeneratedBody {
    pub id: String,
    pub kind: CorpusKind,
    pub polygon: ConvexPolygon<f64>,
    /// Exact coordinates when the generator produces rationals.
    pub exact: Option<ConvexPolygon<Rational>>,
}

/// Deterministic per seed; body `i` depends only on `(seed, i)`.
pub fn gen_corpus(spec: &CorpusSpec) -> Result<Vec<GeneratedBody>> {
    spec.validate()?;
    (0..spec.count).map(|i| gen_body(spec, i)).collect()
}

pub fn gen_body(spec: &CorpusSpec, index: usize) -> Result<GeneratedBody> {
    let mut rng = body_rng(spec.seed, index);
    let id = format!("{}-{}-{}", spec.kind, spec.seed, index);
    let (polygon, exact) = match spec.kind {
        CorpusKind::Random => (random_body(&mut rng, spec.vertices)?, None),
        CorpusKind::RegularKGon => {
            let exact = regular_k_gon_rational(spec.vertices)?;
            (exact.to_f64(), Some(exact))
        }
        CorpusKind::Ellipse => (ellipse_body(&mut rng, spec.vertices)?, None),
        CorpusKind::AffinePentagon => {
            let map = random_affine(&mut rng);
            (regular_polygon(5, 0.0).apply_affine(&map)?, None)
        }
    };
    Ok(GeneratedBody { id, kind: spec.kind, polygon, exact })
}

fn body_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

pub fn regular_polygon(n: usize, phase: f64) -> ConvexPolygon<f64> {
    let pts: Vec<Point2<f64>> = (0..n)
        .map(|k| {
            let a = phase + TAU * k as f64 / n as f64;
            Point2::new(a.cos(), a.sin())
        })
        .collect();
    ConvexPolygon::from_points(&pts).expect("regular polygon")
}

/// Vertices of the regular `k`-gon rounded to multiples of `10⁻¹²`.
pub fn regular_k_gon_rational(k: usize) -> Result<ConvexPolygon<Rational>> {
    let scale = 1_000_000_000_000i64;
    let round = |v: f64| Rational::new((v * scale as f64).round().to_string().parse().unwrap(), scale.into());
    let pts: Vec<Point2<Rational>> = (0..k)
        .map(|j| {
            let a = TAU * j as f64 / k as f64;
            Point2::new(round(a.cos()), round(a.sin()))
        })
        .collect();
    ConvexPolygon::from_points(&pts)
}

fn random_body(rng: &mut ChaCha8Rng, points: usize) -> Result<ConvexPolygon<f64>> {
    loop {
        let pts: Vec<Point2<f64>> = (0..points)
            .map(|_| {
                let r = rng.gen::<f64>().sqrt();
                let a = rng.gen::<f64>() * TAU;
                Point2::new(r * a.cos(), r * a.sin())
            })
            .collect();
        if let Ok(p) = ConvexPolygon::from_points(&pts) {
            if p.area() > 1e-3 {
                return Ok(p);
            }
        }
    }
}

fn ellipse_body(rng: &mut ChaCha8Rng, m: usize) -> Result<ConvexPolygon<f64>> {
    let minor = rng.gen_range(0.2..1.0);
    let phase = rng.gen::<f64>() * TAU;
    let pts: Vec<Point2<f64>> = (0..m)
        .map(|k| {
            let a = phase + TAU * k as f64 / m as f64;
            Point2::new(a.cos(), minor * a.sin())
        })
        .collect();
    ConvexPolygon::from_points(&pts)?.apply_affine(&random_affine(rng))
}

/// Invertible map with entries in `[−2, 2]` and `|det| ≥ 1/4`.
pub fn random_affine<T: Scalar>(rng: &mut impl Rng) -> AffineMap2<T> {
    loop {
        let m: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        let t: [f64; 2] = std::array::from_fn(|_| rng.gen_range(-5.0..5.0));
        if (m[0] * m[3] - m[1] * m[2]).abs() >= 0.25 {
            let c = |v: f64| T::from_f64(v);
            return AffineMap2::new(c(m[0]), c(m[1]), c(m[2]), c(m[3]), c(t[0]), c(t[1])).expect("det checked");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_four_gon_is_square() {
        let sq = regular_k_gon_rational(4).unwrap();
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.area(), Rational::from_integer(2.into()));
    }

    #[test]
    fn random_bodies_are_valid_and_deterministic() {
        let spec = CorpusSpec::new(CorpusKind::Random, 5, 1, 20);
        let a = gen_corpus(&spec).unwrap();
        let b = gen_corpus(&spec).unwrap();
        assert_eq!(a.len(), 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.polygon, y.polygon);
            assert!(ConvexPolygon::new(x.polygon.vertices().to_vec()).is_ok());
        }
        assert_ne!(a[0].polygon, a[1].polygon);
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("ellipse".parse::<CorpusKind>().unwrap(), CorpusKind::Ellipse);
        assert_eq!("pentagon".parse::<CorpusKind>().unwrap(), CorpusKind::AffinePentagon);
        assert!("blob".parse::<CorpusKind>().is_err());
        assert!(CorpusSpec::new(CorpusKind::Random, 1, 0, 2).validate().is_err());
    }
}
