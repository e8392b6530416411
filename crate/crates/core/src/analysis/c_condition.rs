//! Search for a pair `(a, b)` with `C(a) ∩ C(b) = 0`.
//!
//! A found pair is a certificate: its mutual centralizer is computed exactly.
//! Failure to find one over Q is only probabilistic, with the
//! Schwartz–Zippel bound on the maximal minors of `[ad a; ad b]`.

use alloc::vec::Vec;
use core::fmt;

use super::{finite_vectors, random_vector, AnalysisConfig, AnalysisError, FailureBound};
use crate::lie::StructureConstantAlgebra;
use crate::linalg::add_vec;
use crate::rng::{child_seed, stream, XorShift64Star};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CConditionOutcome {
    Holds,
    ProbablyFails,
    CertifiedFails,
}

impl fmt::Display for CConditionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CConditionOutcome::Holds => "Holds",
            CConditionOutcome::ProbablyFails => "ProbablyFails",
            CConditionOutcome::CertifiedFails => "CertifiedFails",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    /// The center lies in every mutual centralizer.
    NontrivialCenter,
    /// Every pair of a finite algebra was checked.
    ExhaustiveSearch,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Certificate::NontrivialCenter => "nontrivial center",
            Certificate::ExhaustiveSearch => "exhaustive search",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CConditionResult {
    pub outcome: CConditionOutcome,
    pub witness: Option<(Vec<Scalar>, Vec<Scalar>)>,
    /// Deterministic candidates examined before the random phase.
    pub candidates_checked: usize,
    /// Random trials run.
    pub trials_run: usize,
    pub failure_bound: Option<FailureBound>,
    pub certificate: Option<Certificate>,
}

impl CConditionResult {
    fn holds(witness: (Vec<Scalar>, Vec<Scalar>), candidates_checked: usize, trials_run: usize) -> Self {
        CConditionResult {
            outcome: CConditionOutcome::Holds,
            witness: Some(witness),
            candidates_checked,
            trials_run,
            failure_bound: None,
            certificate: None,
        }
    }

    fn certified_fails(certificate: Certificate, candidates_checked: usize) -> Self {
        CConditionResult {
            outcome: CConditionOutcome::CertifiedFails,
            witness: None,
            candidates_checked,
            trials_run: 0,
            failure_bound: None,
            certificate: Some(certificate),
        }
    }
}

/// Structured candidates: basis pairs `i < j`, each basis vector against the
/// sum of all, then the even-indexed sum against the odd-indexed sum.
pub fn deterministic_candidates(g: &StructureConstantAlgebra) -> Vec<(Vec<Scalar>, Vec<Scalar>)> {
    let n = g.dim();
    let f = g.field();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((g.basis_vector(i), g.basis_vector(j)));
        }
    }
    let total = (0..n).fold(g.zero_vector(), |acc, i| add_vec(f, &acc, &g.basis_vector(i)));
    for i in 0..n {
        out.push((g.basis_vector(i), total.clone()));
    }
    let parity_sum =
        |parity: usize| (0..n).filter(|i| i % 2 == parity).fold(g.zero_vector(), |acc, i| add_vec(f, &acc, &g.basis_vector(i)));
    out.push((parity_sum(0), parity_sum(1)));
    out
}

pub fn c_condition(g: &StructureConstantAlgebra, config: &AnalysisConfig) -> Result<CConditionResult, AnalysisError> {
    if config.trials == 0 {
        return Err(AnalysisError::BadInput("trials must be at least 1".into()));
    }
    if !g.center().is_zero() {
        return Ok(CConditionResult::certified_fails(Certificate::NontrivialCenter, 0));
    }
    let n = g.dim();
    if n == 0 {
        // Both centralizers are the zero space.
        return Ok(CConditionResult::holds((Vec::new(), Vec::new()), 0, 0));
    }
    if g.field().is_finite() {
        return exhaustive(g, config);
    }
    let candidates = deterministic_candidates(g);
    for (checked, (a, b)) in candidates.iter().enumerate() {
        if g.mutual_centralizer_dim_unchecked(a, b) == 0 {
            return Ok(CConditionResult::holds((a.clone(), b.clone()), checked + 1, 0));
        }
    }
    let mut rng = XorShift64Star::new(child_seed(config.seed, stream::C_CONDITION));
    for trial in 0..config.trials {
        let a = random_vector(g.field(), n, &mut rng, config.bound);
        let b = random_vector(g.field(), n, &mut rng, config.bound);
        if g.mutual_centralizer_dim_unchecked(&a, &b) == 0 {
            return Ok(CConditionResult::holds((a, b), candidates.len(), trial + 1));
        }
    }
    Ok(CConditionResult {
        outcome: CConditionOutcome::ProbablyFails,
        witness: None,
        candidates_checked: candidates.len(),
        trials_run: config.trials,
        failure_bound: Some(FailureBound::new(n, config.bound, config.trials)),
        certificate: None,
    })
}

fn exhaustive(g: &StructureConstantAlgebra, config: &AnalysisConfig) -> Result<CConditionResult, AnalysisError> {
    let n = g.dim();
    let q = g.field().order().expect("finite field");
    let pairs = q.checked_pow(2 * n as u32).filter(|&p| p <= config.finite_pair_cap);
    if pairs.is_none() {
        return Err(AnalysisError::UnsupportedField(alloc::format!(
            "{}^{} pairs exceed the exhaustive search cap {}",
            q,
            2 * n,
            config.finite_pair_cap
        )));
    }
    let vectors: Vec<Vec<Scalar>> = finite_vectors(g.field(), n).expect("order fits").collect();
    let mut checked = 0;
    for (i, a) in vectors.iter().enumerate() {
        for b in &vectors[i + 1..] {
            checked += 1;
            if g.mutual_centralizer_dim_unchecked(a, b) == 0 {
                return Ok(CConditionResult::holds((a.clone(), b.clone()), checked, 0));
            }
        }
    }
    Ok(CConditionResult::certified_fails(Certificate::ExhaustiveSearch, checked))
}
