//! Sampled evidence that the 9-dimensional example algebra has no pair with
//! trivially intersecting centralizers: for each sampled `(A, B)` an explicit
//! nonzero `D` commuting with both.

use alloc::vec;
use alloc::vec::Vec;

use super::{random_vector, AnalysisError};
use crate::constructions::example_5_7;
use crate::lie::StructureConstantAlgebra;
use crate::linalg::{is_zero_vec, Matrix};
use crate::rng::{child_seed, stream, XorShift64Star};
use crate::scalar::{Field, Scalar};

// Coordinate positions in (a, a13, a14, a15, a23, a24, a25, a35, a45).
const A: usize = 0;
const A35: usize = 7;
const A45: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Example57Report {
    pub samples: usize,
    /// Smallest `dim C(A) ∩ C(B)` seen.
    pub min_mutual_dim: usize,
    /// Samples where the explicit `D` was nonzero and commuted with both.
    pub d_checks_passed: usize,
    /// Indices of samples failing either check.
    pub failures: Vec<usize>,
}

impl Example57Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.min_mutual_dim >= 1
    }
}

/// `D` with `d = d35 = d45 = 0` and both rows `(d_i3, d_i4, d_i5)` equal to a
/// nonzero solution `(u, v, w)` of `a35 x + a45 y - a z = 0`, `b35 x + b45 y - b z = 0`.
pub fn commuting_element(field: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let row = |x: &[Scalar]| vec![x[A35].clone(), x[A45].clone(), field.neg(&x[A])];
    let system = Matrix::from_rows(field.clone(), 3, vec![row(a), row(b)]).expect("two rows of length 3");
    let uvw = system.kernel().basis_vectors().swap_remove(0);
    let mut d = vec![field.zero(); 9];
    for (k, c) in uvw.into_iter().enumerate() {
        d[1 + k] = c.clone();
        d[4 + k] = c;
    }
    d
}

/// Whether the explicit `D` is nonzero and commutes with `a` and `b`.
pub fn check_pair(g: &StructureConstantAlgebra, a: &[Scalar], b: &[Scalar]) -> bool {
    let f = g.field();
    let d = commuting_element(f, a, b);
    !is_zero_vec(f, &d) && is_zero_vec(f, &g.bracket_unchecked(a, &d)) && is_zero_vec(f, &g.bracket_unchecked(b, &d))
}

pub fn verify_example_5_7_refutation(samples: usize, seed: u64, bound: u64) -> Result<Example57Report, AnalysisError> {
    let q = Field::rationals();
    let g = example_5_7(&q)?;
    let mut rng = XorShift64Star::new(child_seed(seed, stream::EXAMPLE_5_7));
    let mut report = Example57Report { samples, min_mutual_dim: usize::MAX, d_checks_passed: 0, failures: Vec::new() };
    for i in 0..samples {
        let a = random_vector(&q, 9, &mut rng, bound);
        let b = random_vector(&q, 9, &mut rng, bound);
        let dim = g.mutual_centralizer_dim_unchecked(&a, &b);
        report.min_mutual_dim = report.min_mutual_dim.min(dim);
        let ok = check_pair(&g, &a, &b);
        if ok {
            report.d_checks_passed += 1;
        }
        if !ok || dim == 0 {
            report.failures.push(i);
        }
    }
    if samples == 0 {
        report.min_mutual_dim = 0;
    }
    Ok(report)
}
