//! Exact arithmetic and dense linear algebra over ℚ(i), plus integer Smith
//! normal form.

mod elim;
mod matrix;
mod modp;
mod multimod;
mod scalar;
mod smith;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use matrix::{invert, kronecker, mat_mul, nullspace, Matrix};
pub use scalar::{parse_rational, rational, rational_from_int, GaussianRational, Rational};
pub use smith::{smith_normal_form, IntMatrix, SmithDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("expected {rows}x{cols} = {} entries, got {len}", rows * cols)]
    EntryCount { rows: usize, cols: usize, len: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("entry ({row}, {col}) is not an integer")]
    NonInteger { row: usize, col: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Wire form of a matrix: `{"rows": n, "cols": m, "entries": [["a/b+c/d*i", …], …]}`.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl TryFrom<MatrixRepr> for Matrix {
    type Error = LinalgError;

    fn try_from(repr: MatrixRepr) -> Result<Self, LinalgError> {
        if repr.rows == 0 || repr.cols == 0 {
            return Err(LinalgError::Parse("matrix dimensions must be positive".into()));
        }
        if repr.entries.len() != repr.rows || repr.entries.iter().any(|r| r.len() != repr.cols) {
            return Err(LinalgError::Parse(format!("entries do not form a {}x{} array", repr.rows, repr.cols)));
        }
        let entries = repr.entries.iter().flatten().map(|s| s.parse()).collect::<Result<Vec<GaussianRational>, _>>()?;
        Matrix::new(repr.rows, repr.cols, entries)
    }
}

impl From<&Matrix> for MatrixRepr {
    fn from(m: &Matrix) -> Self {
        MatrixRepr {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect(),
        }
    }
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixRepr::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::deserialize(deserializer)?;
        Matrix::try_from(repr).map_err(serde::de::Error::custom)
    }
}
