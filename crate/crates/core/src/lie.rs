//! Lie algebras given by structure constants on a basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::{is_zero_vec, Matrix, Subspace};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("bracket entry ({i},{j}) must have i < j")]
    IndexOrder { i: usize, j: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket entry ({i},{j}) appears twice")]
    DuplicateEntry { i: usize, j: usize },
    #[error("coefficient of e_{k} in [e_{i},e_{j}] is not an element of the field")]
    ForeignCoefficient { i: usize, j: usize, k: usize },
    #[error("expected {expected} basis names, got {got}")]
    BasisNames { expected: usize, got: usize },
    #[error("vector of length {got} does not match dimension {dim}")]
    DimensionMismatch { dim: usize, got: usize },
}

/// Sparse coefficient vector `k ↦ c_k`.
pub type SparseVector = Vec<(usize, Scalar)>;

/// A finite-dimensional Lie algebra over an exact field. Only brackets
/// `[e_i, e_j]` with `i < j` are stored; the rest follow from antisymmetry.
#[derive(Debug, Clone)]
pub struct StructureConstantAlgebra {
    name: String,
    field: Field,
    basis_names: Vec<String>,
    brackets: BTreeMap<(usize, usize), SparseVector>,
    /// Dense lookup `i * dim + j ↦ [e_i, e_j]`, antisymmetry filled in.
    table: Vec<SparseVector>,
}

impl PartialEq for StructureConstantAlgebra {
    /// Same field, dimension and structure constants; names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim() == other.dim() && self.brackets == other.brackets
    }
}

impl Eq for StructureConstantAlgebra {}

impl StructureConstantAlgebra {
    pub fn new(
        name: impl Into<String>,
        field: Field,
        basis_names: Vec<String>,
        dim: usize,
        entries: impl IntoIterator<Item = ((usize, usize), SparseVector)>,
    ) -> Result<Self, LieError> {
        if basis_names.len() != dim {
            return Err(LieError::BasisNames { expected: dim, got: basis_names.len() });
        }
        let mut brackets = BTreeMap::new();
        for ((i, j), coeffs) in entries {
            if i >= j {
                return Err(LieError::IndexOrder { i, j });
            }
            if j >= dim {
                return Err(LieError::IndexOutOfRange { index: j, dim });
            }
            let mut dense: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, c) in coeffs {
                if k >= dim {
                    return Err(LieError::IndexOutOfRange { index: k, dim });
                }
                if !field.contains(&c) {
                    return Err(LieError::ForeignCoefficient { i, j, k });
                }
                let slot = dense.entry(k).or_insert_with(|| field.zero());
                *slot = field.add(slot, &c);
            }
            let sparse: SparseVector = dense.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
            if brackets.contains_key(&(i, j)) {
                return Err(LieError::DuplicateEntry { i, j });
            }
            if !sparse.is_empty() {
                brackets.insert((i, j), sparse);
            }
        }
        let mut table = vec![Vec::new(); dim * dim];
        for (&(i, j), v) in &brackets {
            table[i * dim + j] = v.clone();
            table[j * dim + i] = v.iter().map(|(k, c)| (*k, field.neg(c))).collect();
        }
        Ok(StructureConstantAlgebra { name: name.into(), field, basis_names, brackets, table })
    }

    /// Builds from a function producing dense brackets `[e_i, e_j]`, `i < j`.
    pub fn from_bracket_fn(
        name: impl Into<String>,
        field: Field,
        basis_names: Vec<String>,
        mut bracket: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Self, LieError> {
        let dim = basis_names.len();
        let mut entries = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = bracket(i, j);
                let sparse: SparseVector = v.into_iter().enumerate().filter(|(_, c)| !field.is_zero(c)).collect();
                if !sparse.is_empty() {
                    entries.push(((i, j), sparse));
                }
            }
        }
        StructureConstantAlgebra::new(name, field, basis_names, dim, entries)
    }

    pub fn abelian_named(name: impl Into<String>, field: Field, basis_names: Vec<String>) -> Self {
        let dim = basis_names.len();
        StructureConstantAlgebra::new(name, field, basis_names, dim, Vec::new()).expect("no brackets")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Stored entries `(i, j) ↦ [e_i, e_j]` for `i < j`, nonzero only.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), SparseVector> {
        &self.brackets
    }

    /// `[e_i, e_j]` for any pair of indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_vector();
        v[i] = self.field.one();
        v
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), LieError> {
        if v.len() != self.dim() {
            return Err(LieError::DimensionMismatch { dim: self.dim(), got: v.len() });
        }
        Ok(())
    }

    /// Bilinear expansion of `[x, y]`.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let n = self.dim();
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if i == j || f.is_zero(yj) {
                    continue;
                }
                let entry = &self.table[i * n + j];
                if entry.is_empty() {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, s) in entry {
                    out[*k] = f.add(&out[*k], &f.mul(&c, s));
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`; column `j` is `[x, e_j]`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Result<Matrix, LieError> {
        self.check_len(x)?;
        Ok(self.ad_unchecked(x))
    }

    pub(crate) fn ad_unchecked(&self, x: &[Scalar]) -> Matrix {
        let f = &self.field;
        let n = self.dim();
        let mut m = Matrix::zeros(f, n, n);
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for j in 0..n {
                for (k, s) in &self.table[i * n + j] {
                    let cur = m.get(*k, j).clone();
                    m.set(*k, j, f.add(&cur, &f.mul(xi, s)));
                }
            }
        }
        m
    }

    pub fn centralizer(&self, x: &[Scalar]) -> Result<Subspace, LieError> {
        Ok(self.ad_matrix(x)?.kernel())
    }

    /// Kernel of the stacked `ad(e_i)` matrices.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let f = &self.field;
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            let ad = self.ad_unchecked(&self.basis_vector(i));
            rows.extend(ad.row_vectors().into_iter().filter(|r| !is_zero_vec(f, r)));
        }
        Matrix::from_rows_unchecked(f.clone(), n, rows).kernel()
    }

    /// Span of all `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let vectors: Vec<Vec<Scalar>> = self
            .brackets
            .values()
            .map(|sparse| {
                let mut v = self.zero_vector();
                for (k, c) in sparse {
                    v[*k] = c.clone();
                }
                v
            })
            .collect();
        Subspace::span(&self.field, n, vectors).expect("vectors have ambient length")
    }

    /// `[U, V]` for subspaces of this algebra.
    pub fn bracket_subspaces(&self, u: &Subspace, v: &Subspace) -> Subspace {
        let mut vectors = Vec::new();
        for a in u.basis_vectors() {
            for b in v.basis_vectors() {
                let c = self.bracket_unchecked(&a, &b);
                if !is_zero_vec(&self.field, &c) {
                    vectors.push(c);
                }
            }
        }
        Subspace::span(&self.field, self.dim(), vectors).expect("vectors have ambient length")
    }

    /// Derived or lower central series, stopped at the first repetition.
    pub fn series(&self, kind: SeriesKind) -> Series {
        let full = Subspace::full(&self.field, self.dim());
        let mut terms = vec![full.clone()];
        loop {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = match kind {
                SeriesKind::Derived => self.bracket_subspaces(last, last),
                SeriesKind::LowerCentral => self.bracket_subspaces(&full, last),
            };
            if next.dim() == last.dim() {
                break;
            }
            terms.push(next);
        }
        Series { kind, terms }
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived).reaches_zero()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral).reaches_zero()
    }

    /// `dim(C(a) ∩ C(b))`, computed as the nullity of `[ad a; ad b]`.
    pub fn mutual_centralizer_dim(&self, a: &[Scalar], b: &[Scalar]) -> Result<usize, LieError> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self.mutual_centralizer_dim_unchecked(a, b))
    }

    pub(crate) fn mutual_centralizer_dim_unchecked(&self, a: &[Scalar], b: &[Scalar]) -> usize {
        let f = &self.field;
        let stacked = self.ad_unchecked(a).vstack(&self.ad_unchecked(b)).expect("same shape");
        let rows: Vec<Vec<Scalar>> = stacked.row_vectors().into_iter().filter(|r| !is_zero_vec(f, r)).collect();
        let n = self.dim();
        n - Matrix::from_rows_unchecked(f.clone(), n, rows).rank()
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`.
    pub fn validate_structure(&self) -> JacobiReport {
        let n = self.dim();
        let f = &self.field;
        let mut failures = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut defect = self.zero_vector();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        // [e_a, [e_b, e_c]]
                        for (m, s) in &self.table[b * n + c] {
                            for (t, r) in &self.table[a * n + m] {
                                defect[*t] = f.add(&defect[*t], &f.mul(s, r));
                            }
                        }
                    }
                    if !is_zero_vec(f, &defect) {
                        failures.push(JacobiFailure { triple: (i, j, k), defect });
                    }
                }
            }
        }
        JacobiReport { failures }
    }

    /// Human-readable `name = Σ c e_k` form of a vector.
    pub fn describe(&self, v: &[Scalar]) -> String {
        let f = &self.field;
        let mut parts = Vec::new();
        for (k, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            if f.is_one(c) {
                parts.push(self.basis_names[k].clone());
            } else {
                parts.push(format!("({c})*{}", self.basis_names[k]));
            }
        }
        if parts.is_empty() {
            String::from("0")
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
}

#[derive(Debug, Clone)]
pub struct Series {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
}

impl Series {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn reaches_zero(&self) -> bool {
        self.terms.last().is_some_and(Subspace::is_zero)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiFailure {
    pub triple: (usize, usize, usize),
    pub defect: Vec<Scalar>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub failures: Vec<JacobiFailure>,
}

impl JacobiReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn broken_jacobi_is_reported() {
        // [e1,e2]=e3, [e1,e3]=e1 (1-based); the Jacobiator at (1,2,3) is e3.
        let f = Field::rationals();
        let g = StructureConstantAlgebra::new(
            "broken",
            f.clone(),
            names(&["e1", "e2", "e3"]),
            3,
            vec![((0, 1), vec![(2, f.one())]), ((0, 2), vec![(0, f.one())])],
        )
        .unwrap();
        let report = g.validate_structure();
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].triple, (0, 1, 2));
        assert_eq!(report.failures[0].defect, vec![f.zero(), f.zero(), f.one()]);
    }

    #[test]
    fn loader_rejects_bad_entries() {
        let f = Field::rationals();
        let bad = StructureConstantAlgebra::new("x", f.clone(), names(&["a", "b"]), 2, vec![((1, 0), vec![(0, f.one())])]);
        assert_eq!(bad.unwrap_err(), LieError::IndexOrder { i: 1, j: 0 });
        let bad = StructureConstantAlgebra::new("x", f.clone(), names(&["a", "b"]), 2, vec![((0, 1), vec![(5, f.one())])]);
        assert_eq!(bad.unwrap_err(), LieError::IndexOutOfRange { index: 5, dim: 2 });
        let g = StructureConstantAlgebra::abelian_named("a", f.clone(), names(&["a", "b"]));
        assert_eq!(g.bracket(&[f.one()], &[f.one()]).unwrap_err(), LieError::DimensionMismatch { dim: 2, got: 1 });
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let f = Field::rationals();
        let g = StructureConstantAlgebra::new("z", f.clone(), names(&["a", "b"]), 2, vec![((0, 1), vec![(0, f.zero())])]).unwrap();
        assert!(g.structure_constants().is_empty());
        assert!(g.center().is_full());
    }
}
