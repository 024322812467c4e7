use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("diagonal entry {0} is not positive")]
    NonPositiveDiagonal(usize),
    #[error("matrix has a negative entry at ({0}, {1})")]
    NotNonnegative(usize, usize),
    #[error("dimension {0} exceeds the supported maximum of {1}")]
    DimensionTooLarge(usize, usize),
    #[error("matrix is not copositive")]
    NotCopositive,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("support of b is not contained in support of d")]
    SupportNotNested,
    #[error("diagonal witness does not make the matrix diagonally dominant (row {0})")]
    NotDiagonallyDominant(usize),
    #[error("graph of the matrix contains a triangle")]
    NotTriangleFree,
    #[error("column {0} is not in the cone generated by the minimal zeros")]
    NotInCone(usize),
    #[error("no nearly-positive witness found: {0}")]
    WitnessNotFound(String),
    #[error("inconsistent support family: {0}")]
    InconsistentFamily(String),
    #[error("graph too large: {edges} edges (limit {limit})")]
    TooLarge { edges: usize, limit: usize },
    #[error("embedded data corrupt: {0}")]
    DataCorrupt(String),
    #[error("strategy {strategy} inapplicable to case {case}: {reason}")]
    StrategyInapplicable {
        case: u32,
        strategy: String,
        reason: String,
    },
    #[error("case {case} failed: {reason}")]
    CaseFailed { case: u32, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
