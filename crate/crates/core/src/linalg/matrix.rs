use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

use super::{FieldSpec, Scalar};

/// A dense row-major matrix over a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_vec(field: FieldSpec, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: &[Vec<Scalar>]) -> Self {
        Matrix::from_fn(field, rows.len(), cols, |i, j| rows[i][j].clone())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self[(j, i)].clone()
        })
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.cols,
            rhs.rows,
            "matrix product shape mismatch {:?} * {:?}",
            self.shape(),
            rhs.shape()
        );
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out.data[i * rhs.cols + j] += &prod;
                }
            }
        }
        out
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {:?} by {:?}",
                self.shape(),
                rhs.shape()
            )));
        }
        Ok(self.mul(rhs))
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(
            self.shape(),
            rhs.shape(),
            "matrix difference shape mismatch"
        );
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                rhs[(i, j - self.cols)].clone()
            }
        })
    }

    /// `[self ; rhs]`
    pub fn vstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix::from_vec(self.field, self.rows + rhs.rows, self.cols, data)
    }

    pub fn block_diag(field: FieldSpec, blocks: &[Matrix]) -> Matrix {
        let rows = blocks.iter().map(Matrix::rows).sum();
        let cols = blocks.iter().map(Matrix::cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |i, j| {
            self[(r0 + i, c0 + j)].clone()
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| {
            self[(i, idx[j])].clone()
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| {
            self[(idx[i], j)].clone()
        })
    }

    /// Reduced row echelon form and pivot columns.
    ///
    /// Pivots are chosen column by column from the left, taking the first
    /// row (from the top) with a nonzero entry, so the result is canonical.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in c..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for j in c..cols {
                    let v = &self.data[r * cols + j] * &inv;
                    self.data[r * cols + j] = v;
                }
            }
            let support: Vec<usize> = (c..cols)
                .filter(|&j| !self.data[r * cols + j].is_zero())
                .collect();
            let pivot_row: Vec<Scalar> = support
                .iter()
                .map(|&j| self.data[r * cols + j].clone())
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for (&j, v) in support.iter().zip(&pivot_row) {
                    let d = &f * v;
                    self.data[i * cols + j] -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one column per free variable.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (idx, &f) in free.iter().enumerate() {
            k[(f, idx)] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                k[(p, idx)] = -&r[(row, f)];
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, free variables set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has length {} but matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        Ok(self.solve_matrix(&rhs)?.map(|x| x.column(0)))
    }

    /// Some `X` with `self * X = rhs`, or `None` if some column is inconsistent.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows but matrix has {}",
                rhs.rows, self.rows
            )));
        }
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(p, j)] = r[(row, self.cols + j)].clone();
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let id = Matrix::identity(self.field, n);
        let (r, pivots) = self.hstack(&id).rref();
        if n > 0 && (pivots.len() < n || pivots[n - 1] >= n) {
            return None;
        }
        Some(r.submatrix(0, n, n, n))
    }

    /// Basis (as columns) of the column space, taken from the pivot columns.
    pub fn column_space(&self) -> Matrix {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Rows spanning the annihilator of the column space: `L * self = 0`
    /// with `L` of full row rank `rows - rank`.
    pub fn left_kernel(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// `L` with `L * self = I`, for a matrix with independent columns.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let t = self.transpose();
        let id = Matrix::identity(self.field, self.cols);
        t.solve_matrix(&id).ok().flatten().map(|x| x.transpose())
    }

    /// `R` with `self * R = I`, for a matrix with independent rows.
    pub fn right_inverse(&self) -> Option<Matrix> {
        let id = Matrix::identity(self.field, self.rows);
        self.solve_matrix(&id).ok().flatten()
    }

    pub fn trace(&self) -> Scalar {
        let mut t = self.field.zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (r, c): (usize, usize)) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Rank of a family of vectors of equal length.
pub fn rank_of_vectors(field: FieldSpec, len: usize, vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() || len == 0 {
        return 0;
    }
    Matrix::from_rows(field, len, vectors).rank()
}
