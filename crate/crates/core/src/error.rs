use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operands live over different label sets")]
    LabelMismatch,
    #[error("operands mix primal vectors and dual functionals")]
    DualityMismatch,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("the label set must be nonempty")]
    EmptyLabels,
    #[error("not a sublattice: the pair ({s}, {t}) generates the whole plane")]
    NotASublattice { s: String, t: String },
    #[error("expected a positive element: {0}")]
    NotPositive(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("quotient by the whole space has no labels left")]
    DegenerateQuotient,
    #[error("the zero functional has no codimension-one kernel")]
    ZeroFunctional,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}
