use thiserror::Error;

use crate::tensor::Shape;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left} vs {right}")]
    ShapeMismatch {
        op: &'static str,
        left: Shape,
        right: Shape,
    },

    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimMismatch {
        op: &'static str,
        left: usize,
        right: usize,
    },

    #[error("{op} requires a square operator, got {shape}")]
    NotSquare { op: &'static str, shape: Shape },

    #[error("operator is singular to tolerance (condition estimate {condition:.3e})")]
    Singular { condition: f64 },

    #[error("non-finite value {value} at entry ({row}, {col})")]
    NonFinite {
        row: usize,
        col: usize,
        value: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} missing")]
    MissingTensor(String),

    #[error("{tensor}{index} out of range (dim {dim})")]
    IndexOutOfRange {
        tensor: String,
        index: String,
        dim: usize,
    },

    #[error("{tensor}{index} given more than once")]
    DuplicateEntry { tensor: String, index: String },

    #[error("{tensor}: expected {expected} indices per entry, got {got}")]
    IndexArity {
        tensor: String,
        expected: usize,
        got: usize,
    },

    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error(
        "secondary braiding is ill-defined: the two defining expressions differ by {residual:.3e}"
    )]
    TauIllDefined { residual: f64 },

    #[error(
        "certification failed for {what}: residual {residual:.3e} exceeds tolerance {tol:.3e}"
    )]
    Certification {
        what: String,
        residual: f64,
        tol: f64,
    },

    #[error("unknown identity id {0:?}")]
    UnknownIdentity(String),

    #[error("{0:?} is not a built-in instance or an existing file (try `braidcheck list`)")]
    UnknownBuiltin(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
