//! Solvable algebras given as `k ⊕ n`: a commutative `k` acting diagonally on
//! a nilpotent ideal `n` with declared weights.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{random_vector, AnalysisConfig, AnalysisError, FailureBound};
use crate::constructions::{abelian, is_derivation, semidirect};
use crate::lie::StructureConstantAlgebra;
use crate::linalg::{add_vec, Matrix, Subspace};
use crate::rng::{child_seed, stream, XorShift64Star};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPresentation {
    pub k_dim: usize,
    pub n_algebra: StructureConstantAlgebra,
    /// One functional on `k` per block, as its values on the basis of `k`.
    pub weights: Vec<Vec<Scalar>>,
    /// Partition of the basis indices of `n`, one block per weight.
    pub blocks: Vec<Vec<usize>>,
    /// `action[t]` is the matrix of the `t`-th basis element of `k` on `n`.
    pub action: Vec<Matrix>,
}

impl SplitPresentation {
    /// Presentation whose action is the diagonal one the weights prescribe.
    pub fn diagonal(n_algebra: StructureConstantAlgebra, k_dim: usize, weights: Vec<Vec<Scalar>>, blocks: Vec<Vec<usize>>) -> Self {
        let f = n_algebra.field().clone();
        let dim = n_algebra.dim();
        let action = (0..k_dim)
            .map(|t| {
                let mut m = Matrix::zeros(&f, dim, dim);
                for (w, block) in weights.iter().zip(&blocks) {
                    for &i in block {
                        if let Some(c) = w.get(t) {
                            m.set(i, i, c.clone());
                        }
                    }
                }
                m
            })
            .collect();
        SplitPresentation { k_dim, n_algebra, weights, blocks, action }
    }

    fn is_zero_weight(&self, b: usize) -> bool {
        let f = self.n_algebra.field();
        self.weights[b].iter().all(|c| f.is_zero(c))
    }

    /// Basis indices of `n` carrying weight zero.
    pub fn zero_weight_indices(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            (0..self.blocks.len()).filter(|&b| self.is_zero_weight(b)).flat_map(|b| self.blocks[b].iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// The semidirect product `k ⋉ n`.
    pub fn to_algebra(&self) -> Result<StructureConstantAlgebra, AnalysisError> {
        let k = abelian(self.n_algebra.field(), self.k_dim);
        Ok(semidirect(&k, &self.n_algebra, &self.action)?.with_name(format!("k{}+{}", self.k_dim, self.n_algebra.name())))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SplitReport {
    pub defects: Vec<String>,
}

impl SplitReport {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }
}

pub fn check_split_presentation(p: &SplitPresentation) -> SplitReport {
    let mut defects = Vec::new();
    let n = &p.n_algebra;
    let f = n.field();
    let dim = n.dim();
    if p.weights.len() != p.blocks.len() {
        defects.push(format!("{} weights for {} blocks", p.weights.len(), p.blocks.len()));
        return SplitReport { defects };
    }
    for (b, w) in p.weights.iter().enumerate() {
        if w.len() != p.k_dim || w.iter().any(|c| !f.contains(c)) {
            defects.push(format!("weight {b} is not a functional on k"));
        }
    }
    if p.action.len() != p.k_dim || p.action.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != f) {
        defects.push(format!("need {} action matrices of size {dim}", p.k_dim));
    }
    let mut seen = vec![0usize; dim];
    for block in &p.blocks {
        for &i in block {
            if i < dim {
                seen[i] += 1;
            } else {
                defects.push(format!("block index {i} out of range"));
            }
        }
    }
    if seen.iter().any(|&c| c != 1) {
        defects.push("blocks do not partition the basis of n".into());
    }
    if !defects.is_empty() {
        return SplitReport { defects };
    }
    for (a, wa) in p.weights.iter().enumerate() {
        if p.weights[a + 1..].contains(wa) {
            defects.push(format!("weight {a} is declared twice"));
        }
    }
    if !n.is_nilpotent() {
        defects.push("n is not nilpotent".into());
    }
    for (t, m) in p.action.iter().enumerate() {
        if !is_derivation(n, m) {
            defects.push(format!("action of k basis element {t} is not a derivation"));
        }
        for (w, block) in p.weights.iter().zip(&p.blocks) {
            for &i in block {
                let mut expect = vec![f.zero(); dim];
                expect[i] = w[t].clone();
                let col: Vec<Scalar> = (0..dim).map(|r| m.get(r, i).clone()).collect();
                if col != expect {
                    defects.push(format!("k basis element {t} does not act on n basis element {i} by its weight"));
                }
            }
        }
    }
    if p.k_dim > 0 {
        let weight_rank = if p.weights.is_empty() {
            0
        } else {
            Matrix::from_rows(f.clone(), p.k_dim, p.weights.clone()).expect("checked lengths").rank()
        };
        if weight_rank < p.k_dim {
            defects.push("weights have a nonzero common kernel on k".into());
        }
        let flat: Vec<Vec<Scalar>> = p.action.iter().map(|m| m.entries().to_vec()).collect();
        if Matrix::from_rows(f.clone(), dim * dim, flat).expect("equal sizes").rank() < p.k_dim {
            defects.push("action of k is not faithful".into());
        }
    }
    SplitReport { defects }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    /// `C(x) ∩ n_0 = 0` inside `n`, checked exactly.
    Admissible {
        witness: Vec<Scalar>,
        candidates_checked: usize,
        trials_run: usize,
    },
    ProbablyNot {
        trials: usize,
        bound: FailureBound,
    },
    /// A nonzero element of `n_0` central in `n`.
    CertifiedNot {
        central: Vec<Scalar>,
    },
}

/// Largest number of one-vector-per-block candidates tried.
const BLOCK_CANDIDATE_CAP: usize = 1024;

fn meets_n0(n: &StructureConstantAlgebra, n0: &[usize], x: &[Scalar]) -> bool {
    let f = n.field();
    let cols: Vec<Vec<Scalar>> = n0.iter().map(|&j| n.bracket_unchecked(x, &n.basis_vector(j))).collect();
    // Columns as rows: rank of the transpose.
    let rank = if cols.is_empty() { 0 } else { Matrix::from_rows(f.clone(), n.dim(), cols).expect("ambient length").rank() };
    rank < n0.len()
}

pub fn check_admissible(p: &SplitPresentation, config: &AnalysisConfig) -> Result<Admissibility, AnalysisError> {
    let report = check_split_presentation(p);
    if !report.is_valid() {
        return Err(AnalysisError::BadInput(report.defects.join("; ")));
    }
    let n = &p.n_algebra;
    let f = n.field();
    let n0 = p.zero_weight_indices();
    let n0_space = Subspace::span(f, n.dim(), n0.iter().map(|&i| n.basis_vector(i)).collect())?;
    let central = n0_space.intersect(&n.center())?;
    if !central.is_zero() {
        return Ok(Admissibility::CertifiedNot { central: central.basis_vectors().swap_remove(0) });
    }
    let nonzero: Vec<&Vec<usize>> =
        p.blocks.iter().enumerate().filter(|&(b, block)| !p.is_zero_weight(b) && !block.is_empty()).map(|(_, block)| block).collect();
    let mut checked = 0;
    let mut choice = vec![0usize; nonzero.len()];
    loop {
        let x = nonzero.iter().zip(&choice).fold(n.zero_vector(), |acc, (block, &c)| add_vec(f, &acc, &n.basis_vector(block[c])));
        checked += 1;
        if !meets_n0(n, &n0, &x) {
            return Ok(Admissibility::Admissible { witness: x, candidates_checked: checked, trials_run: 0 });
        }
        // Mixed-radix increment over the blocks.
        let mut pos = 0;
        while pos < choice.len() {
            choice[pos] += 1;
            if choice[pos] < nonzero[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
        if pos == choice.len() || checked >= BLOCK_CANDIDATE_CAP {
            break;
        }
    }
    if f.is_finite() {
        return Err(AnalysisError::UnsupportedField("random admissibility sampling needs Q".into()));
    }
    let mut rng = XorShift64Star::new(child_seed(config.seed, stream::ADMISSIBLE));
    for trial in 0..config.trials {
        let x = random_vector(f, n.dim(), &mut rng, config.bound);
        if !meets_n0(n, &n0, &x) {
            return Ok(Admissibility::Admissible { witness: x, candidates_checked: checked, trials_run: trial + 1 });
        }
    }
    Ok(Admissibility::ProbablyNot { trials: config.trials, bound: FailureBound::new(n0.len(), config.bound, config.trials) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::heisenberg;
    use crate::scalar::Field;

    fn q() -> Field {
        Field::rationals()
    }

    fn w(v: i64) -> Vec<Scalar> {
        vec![q().from_i64(v)]
    }

    #[test]
    fn split_borel_of_sl2() {
        let n = abelian(&q(), 1);
        let p = SplitPresentation::diagonal(n, 1, vec![w(2)], vec![vec![0]]);
        assert!(check_split_presentation(&p).is_valid());
        assert!(matches!(check_admissible(&p, &AnalysisConfig::default()).unwrap(), Admissibility::Admissible { .. }));
        assert_eq!(p.to_algebra().unwrap().dim(), 2);
    }

    #[test]
    fn central_zero_weight_is_certified_not() {
        let n = abelian(&q(), 2);
        let p = SplitPresentation::diagonal(n, 1, vec![w(1), w(0)], vec![vec![0], vec![1]]);
        assert!(check_split_presentation(&p).is_valid());
        assert!(matches!(check_admissible(&p, &AnalysisConfig::default()).unwrap(), Admissibility::CertifiedNot { .. }));
    }

    #[test]
    fn phantom_weight_is_reported() {
        let n = abelian(&q(), 1);
        let mut p = SplitPresentation::diagonal(n, 1, vec![w(1)], vec![vec![0]]);
        p.action[0] = Matrix::zeros(&q(), 1, 1);
        let r = check_split_presentation(&p);
        assert!(r.defects.iter().any(|d| d.contains("by its weight")));
        assert!(r.defects.iter().any(|d| d.contains("faithful")));
    }

    #[test]
    fn heisenberg_with_central_zero_weight() {
        let n = heisenberg(&q(), 1);
        let p = SplitPresentation::diagonal(n, 1, vec![w(1), w(-1), w(0)], vec![vec![0], vec![1], vec![2]]);
        assert!(check_split_presentation(&p).is_valid());
        assert!(matches!(check_admissible(&p, &AnalysisConfig::default()).unwrap(), Admissibility::CertifiedNot { .. }));
    }
}
