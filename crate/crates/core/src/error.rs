use thiserror::Error;

/// Errors raised by the geometry kernel, the solver and the constructive pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("affine map is singular")]
    SingularMap,
    #[error("lines are parallel")]
    ParallelLines,
    #[error("clipping produced an empty polygon")]
    EmptyResult,
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("division by an interval containing zero")]
    DivisionByIntervalContainingZero,
    #[error("degenerate body: {0}")]
    DegenerateBody(String),
    #[error("no feasible quadruple of support directions")]
    NoFeasibleQuadruple,
    #[error("Varignon parallelogram is degenerate")]
    DegenerateParallelogram,
    #[error("normalization violated: {0}")]
    NormalizationViolated(String),
    #[error("octagon area identity violated: shoelace {shoelace} vs x + y = {widths}")]
    AreaIdentityViolated { shoelace: String, widths: String },
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("inconsistent case: {0}")]
    InconsistentCase(String),
    #[error("solver failure: {0}")]
    SolverFailure(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
