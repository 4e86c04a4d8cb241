use thiserror::Error;

use crate::scalar::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },

    #[error("invalid block at degree {degree}: {reason}")]
    InvalidBlock { degree: i32, reason: String },

    #[error("singular morphism: block at degree {degree} is not invertible")]
    Singular { degree: i32 },

    #[error("structure map `{map}` has type {actual}, expected {expected}")]
    WrongStructureMap {
        map: String,
        expected: String,
        actual: String,
    },

    #[error("coordinate out of range for `{map}`: degree {degree}, row {row}, col {col}")]
    OutOfRange {
        map: String,
        degree: i32,
        row: usize,
        col: usize,
    },

    #[error("degenerate pairing: kernel vector [{}]", .kernel.join(", "))]
    DegeneratePairing { kernel: Vec<String> },

    #[error("algebra is not commutative: e{0} * e{1} != e{1} * e{0}")]
    NotCommutative(usize, usize),

    #[error("invalid algebra presentation: {0}")]
    InvalidAlgebra(String),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("parse error at {line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    #[error("type error: {0}")]
    Type(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("line {line}: {inner}")]
    Located { line: usize, inner: Box<Error> },
}

impl Error {
    /// Attaches a script line unless the error already carries one.
    pub fn at_line(self, line: usize) -> Self {
        match self {
            Error::Parse { .. } | Error::Located { .. } => self,
            inner => Error::Located {
                line,
                inner: Box::new(inner),
            },
        }
    }

    pub(crate) fn shape(left: impl ToString, right: impl ToString) -> Self {
        Error::ShapeMismatch {
            left: left.to_string(),
            right: right.to_string(),
        }
    }
}
