//! Dense and column-sparse exact matrices with rank, kernel and quotient
//! computations.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;
use crate::sparse::{Echelon, SparseVec};

/// Shape mismatch between matrices that must share a dimension.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("shape mismatch: {what} ({left} vs {right})")]
pub struct ShapeError {
    pub what: &'static str,
    pub left: usize,
    pub right: usize,
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Build from row vectors; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self, ShapeError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(ShapeError { what: "row length", left: r.len(), right: cols });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Build from column vectors of length `rows`.
    pub fn from_columns(cols: &[Vec<F>], rows: usize) -> Result<Self, ShapeError> {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != rows {
                return Err(ShapeError { what: "column length", left: c.len(), right: rows });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect(),
            cols,
        )
        .expect("rectangular input")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ShapeError> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(ShapeError { what: "matrix sum", left: self.rows * self.cols, right: other.rows * other.cols });
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ShapeError> {
        if self.cols != other.rows {
            return Err(ShapeError { what: "matrix product", left: self.cols, right: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[F]) -> Result<Vec<F>, ShapeError> {
        if v.len() != self.cols {
            return Err(ShapeError { what: "matrix-vector product", left: self.cols, right: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut s = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s += a.clone() * b.clone();
                    }
                }
                s
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec<F>> {
        (0..self.rows).map(|i| SparseVec::from_dense(self.row(i))).collect()
    }

    pub fn sparse_columns(&self) -> Vec<SparseVec<F>> {
        (0..self.cols).map(|j| SparseVec::from_dense(&self.column(j))).collect()
    }

    /// Reduced row echelon form of the row space.
    pub fn row_echelon(&self) -> Echelon<F> {
        Echelon::from_vectors(self.cols, &self.sparse_rows())
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        rank(self)
    }

    /// Exact inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let e = aug.row_echelon();
        if (0..n).any(|c| !e.is_pivot(c)) {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for row in e.rows() {
            let (p, _) = row.leading().expect("nonzero row");
            for (c, x) in row.entries() {
                if *c >= n {
                    inv.set(*p, c - n, x.clone());
                }
            }
        }
        Some(inv)
    }
}

/// A matrix stored as sparse columns; used for differentials, whose
/// blocks are large but very sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<F: Scalar> {
    rows: usize,
    columns: Vec<SparseVec<F>>,
}

impl<F: Scalar> SparseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec<F>>) -> Self {
        for c in &columns {
            if let Some(m) = c.max_index() {
                assert!(m < rows, "column entry {m} out of range {rows}");
            }
        }
        SparseMatrix { rows, columns }
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        SparseMatrix { rows: m.rows(), columns: m.sparse_columns() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &SparseVec<F> {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec<F>] {
        &self.columns
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.columns[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, x) in c.entries() {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn apply(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = SparseVec::new();
        for (j, x) in v.entries() {
            out = out.axpy(x, &self.columns[*j]);
        }
        out
    }

    /// `self * other`.
    pub fn compose(&self, other: &Self) -> Result<Self, ShapeError> {
        if self.cols() != other.rows {
            return Err(ShapeError { what: "matrix product", left: self.cols(), right: other.rows });
        }
        Ok(SparseMatrix {
            rows: self.rows,
            columns: other.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        Echelon::from_vectors(self.rows, &self.columns).rank()
    }
}

/// Exact rank of a dense matrix.
pub fn rank<F: Scalar>(m: &Matrix<F>) -> usize {
    m.row_echelon().rank()
}

/// Exact basis of the null space `{v : M v = 0}`, returned as dense column
/// vectors; the count is `cols - rank`.
pub fn kernel_basis<F: Scalar>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.row_echelon()
        .null_space()
        .into_iter()
        .map(|v| v.to_dense(m.cols()))
        .collect()
}

/// `dim span(ambient) / (span(ambient) ∩ span(sub))` where both matrices hold
/// generators as columns in a common coordinate space.
pub fn quotient_dim<F: Scalar>(ambient: &Matrix<F>, sub: &Matrix<F>) -> Result<usize, ShapeError> {
    if ambient.rows() != sub.rows() {
        return Err(ShapeError { what: "row dimension", left: ambient.rows(), right: sub.rows() });
    }
    let mut e = Echelon::from_vectors(sub.rows(), &sub.sparse_columns());
    let base = e.rank();
    for c in ambient.sparse_columns() {
        e.insert(&c);
    }
    Ok(e.rank() - base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Q;

    #[test]
    fn inverse_roundtrip() {
        let m: Matrix<Q> = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let i = m.inverse().unwrap();
        assert!(m.mul(&i).unwrap().is_identity());
        let s: Matrix<Q> = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn sparse_compose_matches_dense() {
        let a: Matrix<Q> = Matrix::from_i64(&[&[1, 2, 0], &[0, 1, -1]]);
        let b: Matrix<Q> = Matrix::from_i64(&[&[1, 0], &[3, 1], &[0, 2]]);
        let c = SparseMatrix::from_dense(&a).compose(&SparseMatrix::from_dense(&b)).unwrap();
        assert_eq!(c.to_dense(), a.mul(&b).unwrap());
    }
}
