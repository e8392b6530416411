//! Dense exact linear algebra: reduced row-echelon form, kernels, solving,
//! and subspaces kept in canonical (RREF) form.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("expected {expected} entries, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("entry {0} is not an element of the matrix field")]
    ForeignEntry(usize),
    #[error("vectors are linearly dependent")]
    Dependent,
}

/// Row-major matrix over one field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::ShapeMismatch { expected: rows * cols, got: data.len() });
        }
        if let Some(k) = data.iter().position(|x| !field.contains(x)) {
            return Err(LinalgError::ForeignEntry(k));
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Builds from row vectors that must all have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::ShapeMismatch { expected: cols, got: r.len() });
            }
            data.extend(r);
        }
        Matrix::new(field, n, cols, data)
    }

    pub(crate) fn from_rows_unchecked(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Matrix {
        let n = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        debug_assert_eq!(data.len(), n * cols);
        Matrix { field, rows: n, cols, data }
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(self.field.contains(&v));
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { field: self.field.clone(), rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::ShapeMismatch { expected: self.cols, got: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(&self.field, self.row(i), v)).collect())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch { expected: self.cols, got: other.rows });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(&Field, &Scalar, &Scalar) -> Scalar) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch { expected: self.data.len(), got: other.data.len() });
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| op(&self.field, a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(LinalgError::ShapeMismatch { expected: self.cols, got: other.cols });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Canonical reduced row-echelon form and rank. Pivots are chosen column
    /// by column from the left, taking the topmost usable row.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&self.field, &mut rows, self.cols);
        let m = Matrix::from_rows_unchecked(self.field.clone(), self.cols, rows);
        (m, pivots.len())
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.row_vectors();
        rref_in_place(&self.field, &mut rows, self.cols).len()
    }

    /// Null space `{x : self * x = 0}` in canonical form.
    pub fn kernel(&self) -> Subspace {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&self.field, &mut rows, self.cols);
        Subspace::span(&self.field, self.cols, kernel_from_rref(&self.field, &rows, &pivots, self.cols))
            .expect("kernel vectors have ambient length")
    }

    /// One solution of `self * x = b` with every free variable set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::ShapeMismatch { expected: self.rows, got: b.len() });
        }
        let f = &self.field;
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let pivots = rref_in_place(f, &mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = rows[r][self.cols].clone();
        }
        Ok(Some(x))
    }
}

pub fn dot(f: &Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = f.zero();
    for (x, y) in a.iter().zip(b) {
        if f.is_zero(x) || f.is_zero(y) {
            continue;
        }
        acc = f.add(&acc, &f.mul(x, y));
    }
    acc
}

pub fn add_vec(f: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn sub_vec(f: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn scale_vec(f: &Field, c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| f.mul(c, x)).collect()
}

pub fn is_zero_vec(f: &Field, a: &[Scalar]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

/// Gauss-Jordan elimination restricted to the first `cols` columns.
/// Returns pivot columns; zero rows end up at the bottom.
pub(crate) fn rref_in_place(f: &Field, rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let width = rows.first().map_or(0, |row| row.len());
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !f.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, found);
        let inv = f.inv(&rows[r][c]).expect("pivot is nonzero");
        if !f.is_one(&rows[r][c]) {
            for x in rows[r][c..width].iter_mut() {
                if !f.is_zero(x) {
                    *x = f.mul(x, &inv);
                }
            }
        }
        let support: Vec<usize> = (c..width).filter(|&j| !f.is_zero(&rows[r][j])).collect();
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(below.iter_mut()) {
            if f.is_zero(&other[c]) {
                continue;
            }
            let factor = other[c].clone();
            for &j in &support {
                let t = f.mul(&factor, &pivot_row[j]);
                other[j] = f.sub(&other[j], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn kernel_from_rref(f: &Field, rows: &[Vec<Scalar>], pivots: &[usize], cols: usize) -> Vec<Vec<Scalar>> {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(&rows[r][free]);
        }
        out.push(v);
    }
    out
}

/// A linear subspace of `field^ambient_dim`, stored as the nonzero rows of a
/// canonical RREF basis matrix. Equality is equality of canonical bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(field: &Field, ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Matrix::zeros(field, 0, ambient_dim) }
    }

    pub fn full(field: &Field, ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Matrix::identity(field, ambient_dim) }
    }

    /// Span of arbitrary vectors of length `ambient_dim`.
    pub fn span(field: &Field, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Result<Subspace, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinalgError::ShapeMismatch { expected: ambient_dim, got: v.len() });
        }
        let mut rows = vectors;
        let pivots = rref_in_place(field, &mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Ok(Subspace { ambient_dim, basis: Matrix::from_rows_unchecked(field.clone(), ambient_dim, rows) })
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis as matrix rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    fn pivot_columns(&self) -> Vec<usize> {
        let f = self.field();
        (0..self.dim()).map(|i| self.basis.row(i).iter().position(|x| !f.is_zero(x)).expect("basis rows are nonzero")).collect()
    }

    /// Membership by reduction against the canonical basis.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        if v.len() != self.ambient_dim {
            return false;
        }
        let f = self.field();
        let mut w = v.to_vec();
        for (i, c) in self.pivot_columns().into_iter().enumerate() {
            if f.is_zero(&w[c]) {
                continue;
            }
            let factor = w[c].clone();
            for (x, b) in w.iter_mut().zip(self.basis.row(i)) {
                if !f.is_zero(b) {
                    *x = f.sub(x, &f.mul(&factor, b));
                }
            }
        }
        is_zero_vec(f, &w)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    /// Linear functionals vanishing on this subspace (as vectors under the
    /// standard pairing). `x` lies in the subspace iff every annihilator
    /// vector pairs to zero with `x`.
    pub fn annihilator(&self) -> Subspace {
        self.basis.kernel()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::AmbientMismatch(self.ambient_dim, other.ambient_dim));
        }
        if self.field() != other.field() {
            return Err(LinalgError::FieldMismatch);
        }
        Ok(())
    }

    /// Intersection as the common solution set of both annihilator systems.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let constraints = self.annihilator().basis.vstack(&other.annihilator().basis)?;
        Ok(constraints.kernel())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_compatible(other)?;
        let mut vectors = self.basis_vectors();
        vectors.extend(other.basis_vectors());
        Subspace::span(self.field(), self.ambient_dim, vectors)
    }
}

/// Coordinates relative to a fixed list of linearly independent vectors.
#[derive(Debug, Clone)]
pub struct CoordinateSystem {
    field: Field,
    len: usize,
    count: usize,
    /// RREF rows of the basis, each followed by its row-operation record.
    reduced: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl CoordinateSystem {
    pub fn new(field: &Field, len: usize, vectors: &[Vec<Scalar>]) -> Result<CoordinateSystem, LinalgError> {
        let count = vectors.len();
        let mut rows = Vec::with_capacity(count);
        for (i, v) in vectors.iter().enumerate() {
            if v.len() != len {
                return Err(LinalgError::ShapeMismatch { expected: len, got: v.len() });
            }
            let mut r = v.clone();
            r.extend((0..count).map(|k| if k == i { field.one() } else { field.zero() }));
            rows.push(r);
        }
        let pivots = rref_in_place(field, &mut rows, len);
        if pivots.len() != count {
            return Err(LinalgError::Dependent);
        }
        Ok(CoordinateSystem { field: field.clone(), len, count, reduced: rows, pivots })
    }

    /// Coefficients `c` with `Σ c_i v_i = w`, or `None` if `w` is outside the span.
    pub fn coordinates(&self, w: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = &self.field;
        if w.len() != self.len {
            return None;
        }
        let mut residual = w.to_vec();
        let mut coeffs = vec![f.zero(); self.count];
        for (k, &c) in self.pivots.iter().enumerate() {
            let r = residual[c].clone();
            if f.is_zero(&r) {
                continue;
            }
            let row = &self.reduced[k];
            for j in c..self.len {
                if !f.is_zero(&row[j]) {
                    residual[j] = f.sub(&residual[j], &f.mul(&r, &row[j]));
                }
            }
            for i in 0..self.count {
                let e = &row[self.len + i];
                if !f.is_zero(e) {
                    coeffs[i] = f.add(&coeffs[i], &f.mul(&r, e));
                }
            }
        }
        is_zero_vec(f, &residual).then_some(coeffs)
    }
}
