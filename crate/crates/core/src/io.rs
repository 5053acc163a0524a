//! Body files: JSON `{"mode": "float" | "rational", "vertices": [[x, y], ...]}`.
//!
//! Coordinates may be JSON numbers or strings (`"0.1"`, `"1e-3"`, `"3/7"`);
//! both are read exactly as rationals. On output floats are written with 17
//! significant digits and rationals as `"p/q"`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::corpus::GeneratedBody;
use crate::error::{Error, Result};
use crate::geom::{convex_hull, ConvexPolygon, Point2};
use crate::num::{format_f64, format_rational, parse_rational, Rational, Scalar};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Float,
    Rational,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Float => "float",
            Mode::Rational => "rational",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "float" => Ok(Mode::Float),
            "rational" => Ok(Mode::Rational),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

/// A parsed body file; vertices are kept exactly as written.
#[derive(Clone, Debug, PartialEq)]
pub struct BodyFile {
    pub mode: Mode,
    pub vertices: Vec<Point2<Rational>>,
}

#[derive(Deserialize)]
struct RawBody {
    #[serde(default)]
    mode: Option<String>,
    vertices: Vec<Vec<Value>>,
}

fn coordinate(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => parse_rational(&n.to_string()),
        Value::String(s) => parse_rational(s),
        other => Err(Error::Parse(format!("coordinate must be a number or string, got {other}"))),
    }
}

impl BodyFile {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawBody = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mode = raw.mode.as_deref().map(Mode::from_str).transpose()?.unwrap_or_default();
        let vertices = raw
            .vertices
            .iter()
            .enumerate()
            .map(|(i, pair)| match pair.as_slice() {
                [x, y] => Ok(Point2::new(coordinate(x)?, coordinate(y)?)),
                _ => Err(Error::Parse(format!("vertex {i} must be an [x, y] pair"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if vertices.len() < 3 {
            return Err(Error::Parse(format!("need at least 3 vertices, got {}", vertices.len())));
        }
        Ok(Self { mode, vertices })
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Hull of the vertices with exact coordinates.
    pub fn exact_polygon(&self) -> Result<ConvexPolygon<Rational>> {
        convex_hull(&self.vertices).map_err(degenerate)
    }

    /// Hull of the vertices rounded to `f64`.
    pub fn float_polygon(&self) -> Result<ConvexPolygon<f64>> {
        let pts: Vec<Point2<f64>> = self.vertices.iter().map(Point2::to_f64).collect();
        convex_hull(&pts).map_err(degenerate)
    }

    pub fn from_float(polygon: &ConvexPolygon<f64>) -> Self {
        Self { mode: Mode::Float, vertices: polygon.vertices().iter().map(Point2::from_f64).collect() }
    }

    pub fn from_exact(polygon: &ConvexPolygon<Rational>) -> Self {
        Self { mode: Mode::Rational, vertices: polygon.vertices().to_vec() }
    }

    pub fn from_generated(body: &GeneratedBody) -> Self {
        match &body.exact {
            Some(exact) => Self::from_exact(exact),
            None => Self::from_float(&body.polygon),
        }
    }

    pub fn to_json(&self) -> Value {
        let render = |q: &Rational| match self.mode {
            Mode::Float => format_f64(q.to_f64()),
            Mode::Rational => format_rational(q),
        };
        let vertices: Vec<Value> =
            self.vertices.iter().map(|p| Value::from(vec![render(&p.x), render(&p.y)])).collect();
        serde_json::json!({ "mode": self.mode, "vertices": vertices })
    }
}

/// A collinear or too small vertex set is a degenerate body, not a parse error.
fn degenerate(e: Error) -> Error {
    match e {
        Error::DegenerateInput(msg) | Error::InvalidPolygon(msg) => Error::DegenerateBody(msg),
        other => other,
    }
}

/// Points as `[x, y]` pairs of 17-significant-digit strings.
pub fn points_json(points: &[Point2<f64>]) -> Value {
    Value::from(points.iter().map(|p| Value::from(vec![format_f64(p.x), format_f64(p.y)])).collect::<Vec<_>>())
}
