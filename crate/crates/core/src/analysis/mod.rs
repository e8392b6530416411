//! Decision procedures on top of [`crate::lie`]: the C-condition engine, the
//! negative criterion, seaweed ampleness, suitable pairs, split solvable
//! presentations, the injection builder and the combined verdict.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::constructions::ConstructionError;
use crate::finite::FiniteError;
use crate::lie::LieError;
use crate::linalg::LinalgError;
use crate::rng::XorShift64Star;
use crate::scalar::{Field, Scalar};

pub mod c_condition;
pub mod example57;
pub mod injection;
pub mod negative;
pub mod seaweed;
pub mod split;
pub mod verdict;

pub use c_condition::{c_condition, CConditionOutcome, CConditionResult, Certificate};
pub use example57::{verify_example_5_7_refutation, Example57Report};
pub use injection::{lemma_10_1_injection, InjectionReport};
pub use negative::{negative_criterion, BijectionDescription, BijectionKind, NegativeCase, Obligation};
pub use seaweed::{check_ample, check_suitable_pair, AmpleReport, SuitableReport, WeightSpace};
pub use split::{check_admissible, check_split_presentation, Admissibility, SplitPresentation, SplitReport};
pub use verdict::{seaweed_verdict, verdict, Confidence, Rule, Verdict, VerdictReport};

pub const DEFAULT_SEED: u64 = 0x5EED_5EED_5EED_5EED;
pub const DEFAULT_TRIALS: usize = 64;
pub const DEFAULT_BOUND: u64 = 1024;
pub const DEFAULT_SAMPLES: usize = 100;
/// Largest `q^(2n)` for which the C-condition is decided by exhaustive search.
pub const DEFAULT_FINITE_PAIR_CAP: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalysisConfig {
    pub seed: u64,
    pub trials: usize,
    /// Random coordinates are drawn from `[-bound, bound]`.
    pub bound: u64,
    pub samples: usize,
    pub finite_pair_cap: u128,
    /// Largest ring order handed to bijection enumeration.
    pub enumeration_cap: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_BOUND,
            samples: DEFAULT_SAMPLES,
            finite_pair_cap: DEFAULT_FINITE_PAIR_CAP,
            enumeration_cap: crate::finite::ENUMERATION_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("algebra is perfect")]
    PerfectAlgebra,
    #[error("field has fewer than three elements")]
    FieldTooSmall,
    #[error("subalgebra is not commutative")]
    NotCommutative,
    #[error("subspace has the wrong ambient dimension")]
    AmbientMismatch,
    #[error("eigenvalue search exceeds the divisor cap")]
    EigenvalueSearchTooLarge,
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Finite(#[from] FiniteError),
}

/// `(degree/(2B+1))^trials`, kept symbolic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FailureBound {
    pub degree: usize,
    pub denominator: u64,
    pub trials: usize,
}

impl FailureBound {
    pub fn new(degree: usize, bound: u64, trials: usize) -> Self {
        FailureBound { degree, denominator: 2 * bound + 1, trials }
    }
}

impl fmt::Display for FailureBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}/{})^{}", self.degree, self.denominator, self.trials)
    }
}

pub(crate) fn random_vector(field: &Field, len: usize, rng: &mut XorShift64Star, bound: u64) -> Vec<Scalar> {
    (0..len).map(|_| field.from_i64(rng.symmetric(bound))).collect()
}

/// All vectors of `field^n` in index order (coordinate 0 varies fastest).
pub(crate) fn finite_vectors(field: &Field, n: usize) -> Option<impl Iterator<Item = Vec<Scalar>> + '_> {
    let q = u64::try_from(field.order()?).ok()?;
    let total = (q as u128).checked_pow(n as u32)?;
    Some((0..total).map(move |mut idx| {
        (0..n)
            .map(|_| {
                let digit = (idx % q as u128) as u64;
                idx /= q as u128;
                field.element(digit).expect("digit below field order")
            })
            .collect()
    }))
}
