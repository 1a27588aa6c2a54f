//! Dense matrices over ℚ(i).
//!
//! All elimination routines skip zero entries aggressively: the matrices that
//! show up here (matrix units, Kronecker products, conjugated frames) are very
//! sparse even though they are stored densely.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::elim::{clear_denominators, kernel_vectors, reduce_rows, row_space, GaussInt};
use super::modp::independent_rows;
use super::scalar::{GaussianRational, Rational};
use super::smith::IntMatrix;
use super::LinalgError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl Matrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::EntryCount { rows, cols, len: entries.len() });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Convenience constructor from small integer rows. Panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| GaussianRational::from_int(rows[i][j]))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
        }
        m
    }

    /// Matrix unit `E_ij` (0-based) of the given shape.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.entries[i * cols + j] = GaussianRational::one();
        m
    }

    pub fn diagonal(diag: &[GaussianRational]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<GaussianRational> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GaussianRational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[GaussianRational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self.entries.iter().enumerate().all(|(idx, x)| {
                if idx / self.cols == idx % self.cols {
                    x.is_one()
                } else {
                    x.is_zero()
                }
            })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> GaussianRational {
        let mut t = GaussianRational::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| if x.is_zero() { x.clone() } else { x * c }).collect(),
        }
    }

    pub fn try_add(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_sub(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_same_shape(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Ok(Self { rows: self.rows, cols: self.cols, entries })
    }

    fn check_same_shape(&self, rhs: &Matrix) -> Result<(), LinalgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "elementwise",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(())
    }

    /// Exact product `self · rhs`.
    pub fn matmul(&self, rhs: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                op: "mat_mul",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        // Rows of self and columns of rhs are scaled to Z[i] so the inner
        // sums need no gcd; each entry is normalized once at the end.
        let left: Vec<(BigInt, Vec<GaussInt>)> =
            (0..self.rows).map(|i| clear_denominators(self.row(i).iter())).collect();
        let right: Vec<(BigInt, Vec<GaussInt>)> =
            (0..rhs.cols).map(|j| clear_denominators((0..rhs.rows).map(move |r| rhs.get(r, j)))).collect();
        let right_nz: Vec<Vec<usize>> =
            right.iter().map(|(_, col)| (0..col.len()).filter(|&r| !col[r].is_zero()).collect()).collect();
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for (d, row) in &left {
            for ((e, col), nz) in right.iter().zip(&right_nz) {
                let sum = nz
                    .iter()
                    .filter(|&&t| !row[t].is_zero())
                    .fold(GaussInt::zero(), |acc, &t| acc.add(&row[t].mul(&col[t])));
                entries.push(if sum.is_zero() {
                    GaussianRational::zero()
                } else {
                    let den = Rational::from_integer(d * e);
                    GaussianRational::new(Rational::from_integer(sum.re) / &den, Rational::from_integer(sum.im) / &den)
                });
            }
        }
        Ok(Matrix { rows: self.rows, cols: rhs.cols, entries })
    }

    /// Kronecker product: block `(i, j)` of the result is `self[i,j] · rhs`.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        let b = rhs.get(p, q);
                        if !b.is_zero() {
                            out.entries[(i * rhs.rows + p) * cols + j * rhs.cols + q] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Row-major coordinate vector, as a `1 × rows·cols` matrix.
    pub fn vectorize(&self) -> Matrix {
        Matrix { rows: 1, cols: self.entries.len(), entries: self.entries.clone() }
    }

    /// Stacks matrices of equal shape as the rows of their coordinate vectors.
    pub fn coordinate_matrix(mats: &[Matrix]) -> Result<Matrix, LinalgError> {
        let Some(first) = mats.first() else {
            return Ok(Matrix::zeros(0, 0));
        };
        let width = first.rows * first.cols;
        let mut entries = Vec::with_capacity(width * mats.len());
        for m in mats {
            first.check_same_shape(m)?;
            entries.extend(m.entries.iter().cloned());
        }
        Ok(Matrix { rows: mats.len(), cols: width, entries })
    }

    /// Stacks `self` above `below`.
    pub fn vstack(&self, below: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != below.cols {
            return Err(LinalgError::DimensionMismatch {
                op: "vstack",
                left: (self.rows, self.cols),
                right: (below.rows, below.cols),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Ok(Matrix { rows: self.rows + below.rows, cols: self.cols, entries })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows: Vec<Vec<GaussianRational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let pivots = reduce_rows(&mut rows, self.cols);
        let entries = rows.into_iter().flatten().collect();
        (Matrix { rows: self.rows, cols: self.cols, entries }, pivots)
    }

    /// Exact rank. A row set independent mod `p` of size `min(rows, cols)`
    /// already certifies full rank.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<GaussianRational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        if let Some(chosen) = independent_rows(&rows) {
            if chosen.len() == self.rows.min(self.cols) {
                return chosen.len();
            }
        }
        row_space(&rows, self.cols).1.len()
    }

    fn row_space(&self) -> (Vec<Vec<GaussianRational>>, Vec<usize>) {
        let rows: Vec<Vec<GaussianRational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        row_space(&rows, self.cols)
    }

    /// Exact basis of the right kernel, one column matrix per free variable.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let (rref, pivots) = self.row_space();
        kernel_vectors(&rref, &pivots, self.cols)
            .into_iter()
            .map(|v| Matrix { rows: self.cols, cols: 1, entries: v })
            .collect()
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut rows: Vec<Vec<GaussianRational>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { GaussianRational::one() } else { GaussianRational::zero() }));
                r
            })
            .collect();
        let pivots = reduce_rows(&mut rows, n);
        if pivots.len() < n {
            return Err(LinalgError::Singular);
        }
        let entries = rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Ok(Matrix { rows: n, cols: n, entries })
    }

    /// Determinant by fraction-tracking elimination.
    pub fn determinant(&self) -> Result<GaussianRational, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut rows: Vec<Vec<GaussianRational>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut det = GaussianRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return Ok(GaussianRational::zero());
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            det = &det * &rows[c][c];
            let inv = rows[c][c].inv().expect("nonzero pivot");
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let f = &rows[r][c] * &inv;
                for j in c..n {
                    if !rows[c][j].is_zero() {
                        let d = &f * &rows[c][j];
                        rows[r][j] -= &d;
                    }
                }
            }
        }
        Ok(det)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.to_integer().is_some())
    }

    /// Converts to an integer matrix, failing on any non-integer entry.
    pub fn to_int_matrix(&self) -> Result<IntMatrix, LinalgError> {
        let data = self
            .entries
            .iter()
            .enumerate()
            .map(|(idx, x)| {
                x.to_integer().ok_or(LinalgError::NonInteger { row: idx / self.cols, col: idx % self.cols })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntMatrix::new(self.rows, self.cols, data).expect("shape preserved"))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    /// Panics on a dimension mismatch; use [`Matrix::matmul`] for a checked product.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs).expect("matrix dimensions must agree")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Exact product; errors on a dimension mismatch.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix, LinalgError> {
    a.matmul(b)
}

pub fn kronecker(a: &Matrix, b: &Matrix) -> Matrix {
    a.kronecker(b)
}

pub fn nullspace(a: &Matrix) -> Vec<Matrix> {
    a.nullspace()
}

pub fn invert(a: &Matrix) -> Result<Matrix, LinalgError> {
    a.invert()
}
