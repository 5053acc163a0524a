//! `circumquad`: minimum circumscribed quadrilaterals, case reports,
//! constant certification and corpus benchmarks from the command line.
//!
//! Exit codes: 0 success, 1 internal failure, 2 input error, 3 degenerate
//! body, 4 certification failure.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use circumquad_core::bench::{run_bench, write_bench_csv};
use circumquad_core::corpus::{gen_corpus, CorpusKind, CorpusSpec};
use circumquad_core::exact::DEFAULT_PRECISION;
use circumquad_core::geom::ConvexPolygon;
use circumquad_core::io::{points_json, BodyFile};
use circumquad_core::minquad::{solve, SolverOptions};
use circumquad_core::num::parse_rational;
use circumquad_core::pipeline::{all_proven, certify_constants, CaseMachine, PaperConstants};
use circumquad_core::Error;

#[derive(Parser)]
#[command(name = "circumquad", version, about = "Minimum-area circumscribed quadrilaterals of convex polygons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum circumscribed quadrilateral of a body file, as JSON.
    Solve {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Case report with certified factor and witness quadrilateral, as JSON.
    Witness {
        file: PathBuf,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        constants: ConstantArgs,
    },
    /// Certify the constants; exits 4 unless every comparison is proven.
    Certify {
        #[command(flatten)]
        constants: ConstantArgs,
    },
    /// Run the case machine over a generated corpus and print CSV.
    Bench {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Fill the runtime_ms column (makes output non-reproducible).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        solver: SolverArgs,
        #[command(flatten)]
        constants: ConstantArgs,
    },
    /// Generate body files.
    Gen {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Write one `<id>.json` per body here instead of a JSON array to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SolverArgs {
    /// Angle samples over the full circle for the multi-start grid.
    #[arg(long, default_value_t = SolverOptions::default().coarse_grid)]
    grid: usize,
    /// Maximum coordinate-descent sweeps per start.
    #[arg(long, default_value_t = SolverOptions::default().refine_iters)]
    iters: usize,
    /// Relative stopping tolerance.
    #[arg(long, default_value_t = SolverOptions::default().tol)]
    tol: f64,
    /// Phase of the coarse grid.
    #[arg(long = "solver-seed", default_value_t = SolverOptions::default().seed)]
    solver_seed: u64,
    /// Grid candidates refined by descent.
    #[arg(long, default_value_t = SolverOptions::default().starts)]
    starts: usize,
}

impl SolverArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            coarse_grid: self.grid,
            refine_iters: self.iters,
            tol: self.tol,
            seed: self.solver_seed,
            starts: self.starts,
        }
    }
}

#[derive(Args)]
struct ConstantArgs {
    /// Certification precision in bits.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// Override c1 (decimal or p/q).
    #[arg(long)]
    c1: Option<String>,
    /// Override c2; defaults to 1 + sqrt(8 c1 (c1 - 1)).
    #[arg(long)]
    c2: Option<String>,
    /// Override c3.
    #[arg(long)]
    c3: Option<String>,
    /// Override r; defaults to sqrt(32 (sqrt(c1) - 1)).
    #[arg(long)]
    r: Option<String>,
    /// Override delta.
    #[arg(long)]
    delta: Option<String>,
}

impl ConstantArgs {
    fn constants(&self) -> Result<PaperConstants, Error> {
        let mut k = PaperConstants::paper();
        let parse = |s: &Option<String>| s.as_deref().map(parse_rational).transpose();
        if let Some(v) = parse(&self.c1)? {
            k.c1 = v;
        }
        if let Some(v) = parse(&self.c2)? {
            k.c2 = Some(v);
        }
        if let Some(v) = parse(&self.c3)? {
            k.c3 = v;
        }
        if let Some(v) = parse(&self.r)? {
            k.r = Some(v);
        }
        if let Some(v) = parse(&self.delta)? {
            k.delta = v;
        }
        Ok(k)
    }

    fn machine(&self) -> Result<CaseMachine, Failure> {
        let k = self.constants()?;
        match CaseMachine::new(k, self.precision) {
            Ok(m) => Ok(m),
            Err(Error::BadParams(msg)) if msg.starts_with("constants not certified") => Err(Failure::Certification(msg)),
            Err(e) => Err(e.into()),
        }
    }
}

#[derive(Args)]
struct CorpusArgs {
    /// random, regular_k_gon, ellipse or affine_pentagon.
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Sample points (random) or polygon size (regular_k_gon, ellipse).
    #[arg(long, default_value_t = 32)]
    vertices: usize,
}

impl CorpusArgs {
    fn spec(&self) -> Result<CorpusSpec, Error> {
        let kind: CorpusKind = self.kind.parse()?;
        let spec = CorpusSpec::new(kind, self.count, self.seed, self.vertices);
        spec.validate()?;
        Ok(spec)
    }
}

enum Failure {
    Core(Error),
    Certification(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse(_) | Error::BadParams(_)) | Failure::Io(_) => 2,
            Failure::Core(Error::DegenerateBody(_) | Error::DegenerateInput(_)) => 3,
            Failure::Certification(_) => 4,
            Failure::Core(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Certification(m) | Failure::Io(m) => m.clone(),
        }
    }
}

fn load_body(path: &PathBuf) -> Result<ConvexPolygon<f64>, Error> {
    BodyFile::read(path)?.float_polygon()
}

/// Writes to stdout; a closed pipe downstream is not an error.
fn emit(bytes: &[u8]) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match out.write_all(bytes).and_then(|_| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json(value: &Value) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    text.push('\n');
    emit(text.as_bytes())
}

fn cmd_solve(file: &PathBuf, solver: &SolverArgs) -> Result<(), Failure> {
    let body = load_body(file)?;
    let s = solve(&body, &solver.options())?;
    let area_k = body.area();
    let area_q = s.quad.area();
    print_json(&json!({
        "vertices": points_json(s.quad.vertices()),
        "degenerate": s.quad.is_degenerate(),
        "area_K": area_k,
        "area_Q": area_q,
        "ratio": area_q / area_k,
        "contains_K": s.certificate.contains_k,
        "midpoint_residuals": s.certificate.midpoint_residuals,
        "angles": s.angles,
    }))
}

fn cmd_witness(file: &PathBuf, solver: &SolverArgs, constants: &ConstantArgs) -> Result<(), Failure> {
    let machine = constants.machine()?;
    let body = load_body(file)?;
    let report = machine.run(&body, &solver.options())?;
    print_json(&json!({
        "case_id": report.case_id,
        "certified_factor": report.certified_factor,
        "certified_bound": report.certified_factor * std::f64::consts::SQRT_2,
        "empirical_ratio": report.empirical_ratio,
        "area_K": report.area_k,
        "area_Q": report.area_q,
        "witness": {
            "vertices": points_json(report.witness.vertices()),
            "degenerate": report.witness.is_degenerate(),
        },
        "details": report.details,
    }))
}

fn cmd_certify(constants: &ConstantArgs) -> Result<(), Failure> {
    let k = constants.constants()?;
    let comparisons = certify_constants(&k, constants.precision)?;
    let proven = all_proven(&comparisons);
    print_json(&json!({
        "precision_bits": constants.precision,
        "constants": k,
        "comparisons": comparisons,
        "all_proven": proven,
    }))?;
    if proven {
        Ok(())
    } else {
        let failed: Vec<String> = comparisons
            .iter()
            .filter(|c| !c.is_proven())
            .map(|c| format!("{} ({})", c.name, c.verdict))
            .collect();
        Err(Failure::Certification(format!("not proven: {}", failed.join(", "))))
    }
}

fn cmd_bench(corpus: &CorpusArgs, timing: bool, solver: &SolverArgs, constants: &ConstantArgs) -> Result<(), Failure> {
    let spec = corpus.spec()?;
    let machine = constants.machine()?;
    let rows = run_bench(&spec, &machine, &solver.options(), timing)?;
    let mut buffer = Vec::new();
    write_bench_csv(&rows, &mut buffer)?;
    emit(&buffer)
}

fn cmd_gen(corpus: &CorpusArgs, out: &Option<PathBuf>) -> Result<(), Failure> {
    let bodies = gen_corpus(&corpus.spec()?)?;
    match out {
        None => print_json(&Value::from(
            bodies.iter().map(|b| BodyFile::from_generated(b).to_json()).collect::<Vec<_>>(),
        )),
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            for b in &bodies {
                let text = serde_json::to_string_pretty(&BodyFile::from_generated(b).to_json())
                    .map_err(|e| Failure::Io(e.to_string()))?;
                std::fs::write(dir.join(format!("{}.json", b.id)), text + "\n")?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve { file, solver } => cmd_solve(file, solver),
        Command::Witness { file, solver, constants } => cmd_witness(file, solver, constants),
        Command::Certify { constants } => cmd_certify(constants),
        Command::Bench { corpus, timing, solver, constants } => cmd_bench(corpus, *timing, solver, constants),
        Command::Gen { corpus, out } => cmd_gen(corpus, out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
