//! Python bindings: the solver, the case machine, constant certification and
//! the exact corner-cut constructions.
//!
//! Exact inputs accept `int`, `float` (read exactly), `str` (`"0.1"`, `"3/7"`)
//! or `fractions.Fraction`; exact outputs are `"p/q"` strings.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyFloat;

use circumquad_core::corpus::{gen_corpus as core_gen_corpus, CorpusKind, CorpusSpec};
use circumquad_core::exact::DEFAULT_PRECISION;
use circumquad_core::geom::{convex_hull as core_convex_hull, ConvexPolygon, Point2};
use circumquad_core::minquad::{brute_force_min_quad, solve as core_solve, SolverOptions as CoreOptions};
use circumquad_core::num::{format_rational, parse_rational, Rational, Scalar};
use circumquad_core::pipeline::{self, CaseMachine, ContactBox, PaperConstants, ZetaParams};
use circumquad_core::Error;

create_exception!(circumquad, CircumquadError, PyException, "Any failure reported by circumquad.");
create_exception!(circumquad, DegenerateBodyError, CircumquadError, "The body has empty interior.");
create_exception!(circumquad, CertificationError, CircumquadError, "Constants failed certification.");

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::DegenerateBody(_) | Error::DegenerateInput(_) => DegenerateBodyError::new_err(e.to_string()),
        Error::BadParams(ref m) if m.starts_with("constants not certified") => {
            CertificationError::new_err(e.to_string())
        }
        other => CircumquadError::new_err(other.to_string()),
    }
}

type Xy = (f64, f64);

fn polygon(points: Vec<Xy>) -> PyResult<ConvexPolygon<f64>> {
    let pts: Vec<Point2<f64>> = points.into_iter().map(|(x, y)| Point2::new(x, y)).collect();
    core_convex_hull(&pts).map_err(|e| match e {
        Error::DegenerateInput(m) => DegenerateBodyError::new_err(m),
        other => to_py_err(other),
    })
}

fn xy(points: &[Point2<f64>]) -> Vec<Xy> {
    points.iter().map(|p| (p.x, p.y)).collect()
}

fn exact(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(f) = obj.cast::<PyFloat>() {
        let v = f.value();
        if !v.is_finite() {
            return Err(CircumquadError::new_err(format!("non-finite value {v}")));
        }
        return Ok(Rational::from_f64(v));
    }
    parse_rational(&obj.str()?.to_cow()?).map_err(to_py_err)
}

fn exact_point(obj: &Bound<'_, PyAny>) -> PyResult<Point2<Rational>> {
    let (x, y): (Bound<'_, PyAny>, Bound<'_, PyAny>) = obj.extract()?;
    Ok(Point2::new(exact(&x)?, exact(&y)?))
}

/// Options of the multi-start coordinate-descent solver.
#[pyclass(frozen, module = "circumquad")]
struct SolverOptions {
    #[pyo3(get)]
    coarse_grid: usize,
    #[pyo3(get)]
    refine_iters: usize,
    #[pyo3(get)]
    tol: f64,
    #[pyo3(get)]
    seed: u64,
    #[pyo3(get)]
    starts: usize,
}

#[pymethods]
impl SolverOptions {
    #[new]
    #[pyo3(signature = (coarse_grid = 90, refine_iters = 500, tol = 1e-9, seed = 0, starts = 16))]
    fn new(coarse_grid: usize, refine_iters: usize, tol: f64, seed: u64, starts: usize) -> PyResult<Self> {
        let opts = Self { coarse_grid, refine_iters, tol, seed, starts };
        opts.core().validate().map_err(to_py_err)?;
        Ok(opts)
    }

    fn __repr__(&self) -> String {
        format!(
            "SolverOptions(coarse_grid={}, refine_iters={}, tol={}, seed={}, starts={})",
            self.coarse_grid, self.refine_iters, self.tol, self.seed, self.starts
        )
    }
}

impl SolverOptions {
    fn core(&self) -> CoreOptions {
        CoreOptions {
            coarse_grid: self.coarse_grid,
            refine_iters: self.refine_iters,
            tol: self.tol,
            seed: self.seed,
            starts: self.starts,
        }
    }
}

fn options(opts: Option<&SolverOptions>) -> CoreOptions {
    opts.map(SolverOptions::core).unwrap_or_default()
}

/// A minimum circumscribed quadrilateral with its midpoint certificate.
#[pyclass(frozen, get_all, module = "circumquad")]
struct Solution {
    vertices: Vec<Xy>,
    degenerate: bool,
    area_k: f64,
    area_q: f64,
    ratio: f64,
    contains_k: bool,
    midpoint_residuals: Vec<f64>,
    angles: Vec<f64>,
}

#[pymethods]
impl Solution {
    fn __repr__(&self) -> String {
        format!("Solution(ratio={}, vertices={:?})", self.ratio, self.vertices)
    }
}

/// Outcome of the case machine for one body.
#[pyclass(frozen, get_all, module = "circumquad")]
struct CaseReport {
    case_id: String,
    certified_factor: f64,
    empirical_ratio: f64,
    area_k: f64,
    area_q: f64,
    witness: Vec<Xy>,
    /// Per-case measurements as a JSON object.
    details_json: String,
}

#[pymethods]
impl CaseReport {
    /// The measurements as a dict.
    fn details<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        py.import("json")?.call_method1("loads", (self.details_json.as_str(),))
    }

    fn __repr__(&self) -> String {
        format!(
            "CaseReport(case_id={:?}, certified_factor={}, empirical_ratio={})",
            self.case_id, self.certified_factor, self.empirical_ratio
        )
    }
}

/// One certified comparison of the constants.
#[pyclass(frozen, get_all, module = "circumquad")]
struct Comparison {
    name: String,
    lhs: String,
    relation: String,
    rhs: String,
    verdict: String,
    precision_bits: u32,
    lhs_interval: (String, String),
    rhs_interval: (String, String),
}

#[pymethods]
impl Comparison {
    #[getter]
    fn proven(&self) -> bool {
        self.verdict == "proven"
    }

    fn __repr__(&self) -> String {
        format!("Comparison(name={:?}, verdict={:?})", self.name, self.verdict)
    }
}

/// Minimum-area circumscribed quadrilateral of the hull of `points`.
#[pyfunction]
#[pyo3(signature = (points, options = None))]
fn solve(py: Python<'_>, points: Vec<Xy>, options: Option<PyRef<'_, SolverOptions>>) -> PyResult<Solution> {
    let body = polygon(points)?;
    let opts = self::options(options.as_deref());
    let s = py.detach(|| core_solve(&body, &opts)).map_err(to_py_err)?;
    let (area_k, area_q) = (body.area(), s.quad.area());
    Ok(Solution {
        vertices: xy(s.quad.vertices()),
        degenerate: s.quad.is_degenerate(),
        area_k,
        area_q,
        ratio: area_q / area_k,
        contains_k: s.certificate.contains_k,
        midpoint_residuals: s.certificate.midpoint_residuals.to_vec(),
        angles: s.angles,
    })
}

/// Exhaustive search over a uniform grid of support directions.
#[pyfunction]
#[pyo3(signature = (points, grid = 180))]
fn brute_force(py: Python<'_>, points: Vec<Xy>, grid: usize) -> PyResult<Vec<Xy>> {
    let body = polygon(points)?;
    let q = py.detach(|| brute_force_min_quad(&body, grid)).map_err(to_py_err)?;
    Ok(xy(q.vertices()))
}

#[allow(clippy::too_many_arguments)]
fn constants(
    c1: Option<&Bound<'_, PyAny>>,
    c2: Option<&Bound<'_, PyAny>>,
    c3: Option<&Bound<'_, PyAny>>,
    r: Option<&Bound<'_, PyAny>>,
    delta: Option<&Bound<'_, PyAny>>,
) -> PyResult<PaperConstants> {
    let mut k = PaperConstants::paper();
    if let Some(v) = c1 {
        k.c1 = exact(v)?;
    }
    if let Some(v) = c2 {
        k.c2 = Some(exact(v)?);
    }
    if let Some(v) = c3 {
        k.c3 = exact(v)?;
    }
    if let Some(v) = r {
        k.r = Some(exact(v)?);
    }
    if let Some(v) = delta {
        k.delta = exact(v)?;
    }
    Ok(k)
}

/// Case report for the hull of `points` under the (certified) constants.
#[pyfunction]
#[pyo3(signature = (points, options = None, *, precision = DEFAULT_PRECISION, c1 = None, c2 = None, c3 = None, r = None, delta = None))]
#[allow(clippy::too_many_arguments)]
fn witness(
    py: Python<'_>,
    points: Vec<Xy>,
    options: Option<PyRef<'_, SolverOptions>>,
    precision: u32,
    c1: Option<&Bound<'_, PyAny>>,
    c2: Option<&Bound<'_, PyAny>>,
    c3: Option<&Bound<'_, PyAny>>,
    r: Option<&Bound<'_, PyAny>>,
    delta: Option<&Bound<'_, PyAny>>,
) -> PyResult<CaseReport> {
    let k = constants(c1, c2, c3, r, delta)?;
    let body = polygon(points)?;
    let opts = self::options(options.as_deref());
    let report = py
        .detach(|| CaseMachine::new(k, precision).and_then(|m| m.run(&body, &opts)))
        .map_err(to_py_err)?;
    Ok(CaseReport {
        case_id: report.case_id.to_string(),
        certified_factor: report.certified_factor,
        empirical_ratio: report.empirical_ratio,
        area_k: report.area_k,
        area_q: report.area_q,
        witness: xy(report.witness.vertices()),
        details_json: serde_json::to_string(&report.details).map_err(|e| CircumquadError::new_err(e.to_string()))?,
    })
}

/// The eight comparisons behind the final factor.
#[pyfunction]
#[pyo3(signature = (precision = DEFAULT_PRECISION, *, c1 = None, c2 = None, c3 = None, r = None, delta = None))]
fn certify(
    precision: u32,
    c1: Option<&Bound<'_, PyAny>>,
    c2: Option<&Bound<'_, PyAny>>,
    c3: Option<&Bound<'_, PyAny>>,
    r: Option<&Bound<'_, PyAny>>,
    delta: Option<&Bound<'_, PyAny>>,
) -> PyResult<Vec<Comparison>> {
    let k = constants(c1, c2, c3, r, delta)?;
    let out = pipeline::certify_constants(&k, precision).map_err(to_py_err)?;
    Ok(out
        .into_iter()
        .map(|c| Comparison {
            name: c.name,
            lhs: c.lhs,
            relation: c.relation.as_str().to_owned(),
            rhs: c.rhs,
            verdict: c.verdict.as_str().to_owned(),
            precision_bits: c.precision_bits,
            lhs_interval: (c.lhs_interval[0].clone(), c.lhs_interval[1].clone()),
            rhs_interval: (c.rhs_interval[0].clone(), c.rhs_interval[1].clone()),
        })
        .collect())
}

/// Counterclockwise hull vertices.
#[pyfunction]
fn convex_hull(points: Vec<Xy>) -> PyResult<Vec<Xy>> {
    Ok(xy(polygon(points)?.vertices()))
}

/// Area of the hull of `points`.
#[pyfunction]
fn polygon_area(points: Vec<Xy>) -> PyResult<f64> {
    Ok(polygon(points)?.area())
}

/// `ζ_{c,δ}(t)` computed exactly.
#[pyfunction]
fn zeta(c: &Bound<'_, PyAny>, delta: &Bound<'_, PyAny>, t: &Bound<'_, PyAny>) -> PyResult<String> {
    let p = ZetaParams::new(exact(c)?, exact(delta)?, exact(t)?);
    pipeline::zeta(&p).map(|v| format_rational(&v)).map_err(to_py_err)
}

/// `ζ_{c,δ}(−c/2)` by its closed form, computed exactly.
#[pyfunction]
fn zeta_bound(c: &Bound<'_, PyAny>, delta: &Bound<'_, PyAny>) -> PyResult<String> {
    pipeline::zeta_bound(&exact(c)?, &exact(delta)?).map(|v| format_rational(&v)).map_err(to_py_err)
}

/// Exact quadrangle around the unit square and the contacts
/// `v1, v2, w1, w2` (left, bottom, right, top); returns
/// `(branch, vertices, area)` with `"p/q"` strings.
#[pyfunction]
fn lemma_octagon_quad(
    v1: &Bound<'_, PyAny>,
    v2: &Bound<'_, PyAny>,
    w1: &Bound<'_, PyAny>,
    w2: &Bound<'_, PyAny>,
    c: &Bound<'_, PyAny>,
    delta: &Bound<'_, PyAny>,
) -> PyResult<(String, Vec<(String, String)>, String)> {
    let b = ContactBox::from_contacts(exact_point(v1)?, exact_point(v2)?, exact_point(w1)?, exact_point(w2)?);
    let q = pipeline::lemma_octagon_quad(&b, &exact(c)?, &exact(delta)?).map_err(to_py_err)?;
    let vertices = q.quad.vertices().iter().map(|p| (format_rational(&p.x), format_rational(&p.y))).collect();
    Ok((q.branch.to_string(), vertices, format_rational(&q.quad.area())))
}

/// Seeded corpus of bodies as vertex lists.
#[pyfunction]
#[pyo3(signature = (kind, count = 1, seed = 0, vertices = 32))]
fn gen_corpus(kind: &str, count: usize, seed: u64, vertices: usize) -> PyResult<Vec<Vec<Xy>>> {
    let kind: CorpusKind = kind.parse().map_err(to_py_err)?;
    let bodies = core_gen_corpus(&CorpusSpec::new(kind, count, seed, vertices)).map_err(to_py_err)?;
    Ok(bodies.iter().map(|b| xy(b.polygon.vertices())).collect())
}

/// Module initializer; public so the module can be built in embedded interpreters.
#[pymodule]
pub fn circumquad(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add("CircumquadError", py.get_type::<CircumquadError>())?;
    m.add("DegenerateBodyError", py.get_type::<DegenerateBodyError>())?;
    m.add("CertificationError", py.get_type::<CertificationError>())?;
    m.add_class::<SolverOptions>()?;
    m.add_class::<Solution>()?;
    m.add_class::<CaseReport>()?;
    m.add_class::<Comparison>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(convex_hull, m)?)?;
    m.add_function(wrap_pyfunction!(polygon_area, m)?)?;
    m.add_function(wrap_pyfunction!(zeta, m)?)?;
    m.add_function(wrap_pyfunction!(zeta_bound, m)?)?;
    m.add_function(wrap_pyfunction!(lemma_octagon_quad, m)?)?;
    m.add_function(wrap_pyfunction!(gen_corpus, m)?)?;
    Ok(())
}
