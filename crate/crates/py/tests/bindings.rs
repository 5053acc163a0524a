use pyo3::prelude::*;
use pyo3::types::{PyDict, PyModule};

fn with_module<F>(f: F)
where
    F: for<'py> FnOnce(Python<'py>, &Bound<'py, PyModule>) -> PyResult<()>,
{
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "circumquad").unwrap();
        circumquad::circumquad(&m).unwrap();
        f(py, &m).unwrap();
    });
}

#[test]
fn solve_square() {
    with_module(|_py, m| {
        let square = vec![(-1.0, -1.0), (1.0, -1.0), (1.0, 1.0), (-1.0, 1.0)];
        let sol = m.getattr("solve")?.call1((square,))?;
        let ratio: f64 = sol.getattr("ratio")?.extract()?;
        assert!((ratio - 1.0).abs() < 1e-9);
        let vertices: Vec<(f64, f64)> = sol.getattr("vertices")?.extract()?;
        assert_eq!(vertices.len(), 4);
        Ok(())
    });
}

#[test]
fn options_are_validated() {
    with_module(|py, m| {
        let kwargs = PyDict::new(py);
        kwargs.set_item("coarse_grid", 4)?;
        let err = m.getattr("SolverOptions")?.call((), Some(&kwargs)).unwrap_err();
        assert!(err.is_instance(py, &m.getattr("CircumquadError")?));
        Ok(())
    });
}

#[test]
fn certify_and_exact_helpers() {
    with_module(|_py, m| {
        let comparisons = m.getattr("certify")?.call0()?;
        let proven: Vec<bool> = comparisons
            .try_iter()?
            .map(|c| c.and_then(|c| c.getattr("proven")?.extract()))
            .collect::<PyResult<_>>()?;
        assert_eq!(proven, vec![true; 8]);
        let z: String = m.getattr("zeta")?.call1((3, 0, "-3/2"))?.extract()?;
        assert_eq!(z, "2973/340");
        let (branch, _, area): (String, Vec<(String, String)>, String) = m
            .getattr("lemma_octagon_quad")?
            .call1((("-3/2", 0), (0, "-3/2"), ("3/2", "-2/5"), (0, "3/2"), 3, "1/10"))?
            .extract()?;
        assert_eq!((branch.as_str(), area.as_str()), ("U_TOP", "35/4"));
        Ok(())
    });
}

#[test]
fn witness_and_errors() {
    with_module(|py, m| {
        let tri = vec![(0.0, 0.0), (3.0, 0.0), (1.0, 2.0)];
        let report = m.getattr("witness")?.call1((tri,))?;
        let case: String = report.getattr("case_id")?.extract()?;
        assert_eq!(case, "DEGENERATE_TRIANGLE");
        let flat = vec![(0.0, 0.0), (1.0, 1.0), (2.0, 2.0)];
        let err = m.getattr("solve")?.call1((flat,)).unwrap_err();
        assert!(err.is_instance(py, &m.getattr("DegenerateBodyError")?));
        Ok(())
    });
}
