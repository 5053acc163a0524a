//! Corpus benchmark: one row per body, emitted in corpus order.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{gen_corpus, CorpusSpec};
use crate::error::{Error, Result};
use crate::minquad::SolverOptions;
use crate::pipeline::CaseMachine;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "CIRCUMQUAD_THREADS";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub id: String,
    pub n_vertices: usize,
    pub area_k: f64,
    pub area_q: f64,
    pub empirical_ratio: f64,
    pub case_id: String,
    pub certified_factor: f64,
    /// Wall time of the case machine; `None` unless timing was requested.
    pub runtime_ms: Option<f64>,
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn thread_cap() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::BadParams(format!("{THREADS_ENV} must be a positive integer, got {v:?}"))),
        },
    }
}

/// Runs the case machine on every body of the corpus, in parallel.
///
/// Rows come back in corpus order regardless of scheduling. Timings are
/// recorded only when `timing` is set, so that untimed output is
/// reproducible byte for byte.
pub fn run_bench(
    spec: &CorpusSpec,
    machine: &CaseMachine,
    opts: &SolverOptions,
    timing: bool,
) -> Result<Vec<BenchRow>> {
    let bodies = gen_corpus(spec)?;
    let work = || {
        bodies
            .par_iter()
            .map(|body| {
                let start = Instant::now();
                let report = machine
                    .run(&body.polygon, opts)
                    .map_err(|e| Error::SolverFailure(format!("{}: {e}", body.id)))?;
                let elapsed = start.elapsed().as_secs_f64() * 1e3;
                Ok(BenchRow {
                    id: body.id.clone(),
                    n_vertices: body.polygon.len(),
                    area_k: report.area_k,
                    area_q: report.area_q,
                    empirical_ratio: report.empirical_ratio,
                    case_id: report.case_id.to_string(),
                    certified_factor: report.certified_factor,
                    runtime_ms: timing.then_some(elapsed),
                })
            })
            .collect::<Result<Vec<_>>>()
    };
    match thread_cap()? {
        None => work(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::BadParams(e.to_string()))?
            .install(work),
    }
}

/// Writes the header, one row per body and a trailing `# summary` comment line.
pub fn write_bench_csv<W: Write>(rows: &[BenchRow], out: W) -> Result<()> {
    let io = |e: &dyn std::fmt::Display| Error::Parse(format!("writing CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "id",
        "n_vertices",
        "area_K",
        "area_Q",
        "empirical_ratio",
        "case_id",
        "certified_factor",
        "runtime_ms",
    ])
    .map_err(|e| io(&e))?;
    for r in rows {
        w.write_record([
            r.id.clone(),
            r.n_vertices.to_string(),
            format!("{:.17e}", r.area_k),
            format!("{:.17e}", r.area_q),
            format!("{:.17e}", r.empirical_ratio),
            r.case_id.clone(),
            format!("{:.17e}", r.certified_factor),
            r.runtime_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
        ])
        .map_err(|e| io(&e))?;
    }
    let mut out = w.into_inner().map_err(|e| io(&e))?;
    let max = rows.iter().map(|r| r.empirical_ratio).fold(f64::NAN, f64::max);
    writeln!(out, "# summary: bodies={} max_empirical_ratio={:.17e}", rows.len(), max).map_err(|e| io(&e))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::CorpusKind;
    use crate::pipeline::PaperConstants;

    #[test]
    fn rows_are_ordered_and_reproducible() {
        let machine = CaseMachine::new(PaperConstants::paper(), 128).unwrap();
        let spec = CorpusSpec::new(CorpusKind::Random, 6, 7, 12);
        let opts = SolverOptions::default();
        let a = run_bench(&spec, &machine, &opts, false).unwrap();
        let b = run_bench(&spec, &machine, &opts, false).unwrap();
        assert_eq!(a, b);
        let ids: Vec<String> = (0..6).map(|i| format!("random-7-{i}")).collect();
        assert_eq!(a.iter().map(|r| r.id.clone()).collect::<Vec<_>>(), ids);
        let mut text = Vec::new();
        write_bench_csv(&a, &mut text).unwrap();
        let text = String::from_utf8(text).unwrap();
        assert!(text.starts_with("id,n_vertices,area_K,area_Q,empirical_ratio,case_id,certified_factor,runtime_ms\n"));
        assert_eq!(text.lines().count(), 8);
        assert!(text.lines().last().unwrap().starts_with("# summary: bodies=6"));
    }

    #[test]
    fn timing_fills_runtime() {
        let machine = CaseMachine::new(PaperConstants::paper(), 128).unwrap();
        let spec = CorpusSpec::new(CorpusKind::AffinePentagon, 1, 1, 0);
        let rows = run_bench(&spec, &machine, &SolverOptions::default(), true).unwrap();
        assert!(rows[0].runtime_ms.is_some());
        assert!((rows[0].empirical_ratio - 3.0 / 5f64.sqrt()).abs() < 1e-5);
    }
}
