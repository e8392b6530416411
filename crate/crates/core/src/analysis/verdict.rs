//! The combined decision: UA, NOT_UA or UNKNOWN, with the rule that fired.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::c_condition::{c_condition, CConditionOutcome};
use super::negative::{negative_criterion, BijectionDescription, NegativeCase};
use super::seaweed::{check_ample, AmpleReport};
use super::{AnalysisConfig, AnalysisError, FailureBound};
use crate::constructions::{build_seaweed, included_roots, SeaweedSpec};
use crate::finite::{is_wua, Counterexample, FiniteLieRing};
use crate::lie::StructureConstantAlgebra;
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Ua,
    NotUa,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Ua => "UA",
            Verdict::NotUa => "NOT_UA",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    CCondition,
    NegCase1,
    NegCase2,
    NegCase3,
    AmpleSeaweed,
    TrivialDim0,
    /// A non-additive commutator-preserving self-bijection found by enumeration.
    FiniteWua,
    None,
}

impl Rule {
    fn negative(case: NegativeCase) -> Rule {
        match case {
            NegativeCase::Commutative => Rule::NegCase1,
            NegativeCase::CenterOffDerived => Rule::NegCase2,
            NegativeCase::CenterInDerived => Rule::NegCase3,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::CCondition => "C_CONDITION",
            Rule::NegCase1 => "NEG_CASE_1",
            Rule::NegCase2 => "NEG_CASE_2",
            Rule::NegCase3 => "NEG_CASE_3",
            Rule::AmpleSeaweed => "AMPLE_SEAWEED",
            Rule::TrivialDim0 => "TRIVIAL_DIM_0",
            Rule::FiniteWua => "FINITE_WUA",
            Rule::None => "NONE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Confidence {
    pub trials: usize,
    pub bound: u64,
    pub failure_bound: Option<FailureBound>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerdictReport {
    pub algebra: String,
    pub field: FieldSpec,
    pub dim: usize,
    pub center_dim: usize,
    pub derived_codim: usize,
    pub verdict: Verdict,
    pub rule: Rule,
    /// Pair with `C(a) ∩ C(b) = 0`, verified exactly.
    pub witness: Option<(Vec<Scalar>, Vec<Scalar>)>,
    pub bijection: Option<BijectionDescription>,
    /// Labels refer to the base-`q` coding of [`FiniteLieRing::from_algebra`].
    pub finite_counterexample: Option<Counterexample>,
    pub confidence: Option<Confidence>,
    pub seed: u64,
    pub open_problem_note: Option<String>,
    pub note: Option<String>,
}

const NOTE_TRIVIAL_CENTER: &str =
    "trivial center but no C-condition witness was found; it is open whether a Lie ring with trivial center can fail to be UA";
const NOTE_PERFECT: &str =
    "perfect with nontrivial center, so neither criterion applies; the UA property of such algebras is an open problem";
const NOTE_HYPOTHESES: &str = "nontrivial center, but the ring is too small for the swap construction";
const NOTE_FINITE: &str = "finite field: the C-condition implies UA only over infinite fields, so UA is never concluded here";
const NOTE_FINITE_WUA: &str = "finite field: every commutator-preserving self-bijection is additive (wUA), which does not decide UA";

pub fn verdict(g: &StructureConstantAlgebra, config: &AnalysisConfig) -> Result<VerdictReport, AnalysisError> {
    let center = g.center();
    let derived = g.derived_subalgebra();
    let mut report = VerdictReport {
        algebra: g.name().into(),
        field: g.field().spec().clone(),
        dim: g.dim(),
        center_dim: center.dim(),
        derived_codim: g.dim() - derived.dim(),
        verdict: Verdict::Unknown,
        rule: Rule::None,
        witness: None,
        bijection: None,
        finite_counterexample: None,
        confidence: None,
        seed: config.seed,
        open_problem_note: None,
        note: None,
    };
    if g.dim() == 0 {
        report.verdict = Verdict::Ua;
        report.rule = Rule::TrivialDim0;
        return Ok(report);
    }
    if !center.is_zero() {
        if let Some(d) = negative_criterion(g) {
            report.verdict = Verdict::NotUa;
            report.rule = Rule::negative(d.case);
            report.bijection = Some(d);
            return Ok(report);
        }
        if derived.is_full() {
            report.open_problem_note = Some(NOTE_PERFECT.into());
        } else {
            report.note = Some(NOTE_HYPOTHESES.into());
        }
        if g.field().is_finite() {
            finite_fallback(g, config, &mut report)?;
        }
        return Ok(report);
    }
    if g.field().is_finite() {
        report.note = Some(NOTE_FINITE.into());
        finite_fallback(g, config, &mut report)?;
        return Ok(report);
    }
    let c = c_condition(g, config)?;
    report.confidence = Some(Confidence { trials: c.trials_run, bound: config.bound, failure_bound: c.failure_bound });
    match c.outcome {
        CConditionOutcome::Holds => {
            report.verdict = Verdict::Ua;
            report.rule = Rule::CCondition;
            report.witness = c.witness;
        }
        CConditionOutcome::ProbablyFails | CConditionOutcome::CertifiedFails => {
            report.open_problem_note = Some(NOTE_TRIVIAL_CENTER.into());
        }
    }
    Ok(report)
}

/// Enumerates self-bijections when the ring is small enough.
fn finite_fallback(g: &StructureConstantAlgebra, config: &AnalysisConfig, report: &mut VerdictReport) -> Result<(), AnalysisError> {
    let Some(size) = g.field().order().and_then(|q| q.checked_pow(g.dim() as u32)) else {
        return Ok(());
    };
    if size > config.enumeration_cap as u128 {
        return Ok(());
    }
    let ring = FiniteLieRing::from_algebra(g, size)?;
    let w = is_wua(&ring)?;
    match w.counterexample {
        Some(c) => {
            report.verdict = Verdict::NotUa;
            report.rule = Rule::FiniteWua;
            report.finite_counterexample = Some(c);
        }
        None => report.note = Some(NOTE_FINITE_WUA.into()),
    }
    Ok(())
}

/// Verdict for a seaweed of sl_n. Ample seaweeds over Q get the explicit
/// witness `h = diag(n-1, n-3, ..., 1-n)`, `y = Σ` root vectors; the rest go
/// through [`verdict`].
pub fn seaweed_verdict(spec: &SeaweedSpec, config: &AnalysisConfig) -> Result<(VerdictReport, AmpleReport), AnalysisError> {
    let g = build_seaweed(spec)?;
    let roots = included_roots(spec);
    let ample = check_ample(&roots, spec.n);
    if ample.ample && spec.field.is_rationals() && spec.n >= 2 {
        let (h, y) = ample_witness(&g, spec.n, roots.len());
        if g.mutual_centralizer_dim_unchecked(&h, &y) == 0 {
            let mut report = verdict_shell(&g, config);
            report.verdict = Verdict::Ua;
            report.rule = Rule::AmpleSeaweed;
            report.witness = Some((h, y));
            return Ok((report, ample));
        }
    }
    Ok((verdict(&g, config)?, ample))
}

fn verdict_shell(g: &StructureConstantAlgebra, config: &AnalysisConfig) -> VerdictReport {
    VerdictReport {
        algebra: g.name().into(),
        field: g.field().spec().clone(),
        dim: g.dim(),
        center_dim: g.center().dim(),
        derived_codim: g.dim() - g.derived_subalgebra().dim(),
        verdict: Verdict::Unknown,
        rule: Rule::None,
        witness: None,
        bijection: None,
        finite_counterexample: None,
        confidence: None,
        seed: config.seed,
        open_problem_note: None,
        note: None,
    }
}

/// In the seaweed basis (roots first, then `H_k = E_kk - E_{k+1,k+1}`), the
/// coefficient of `H_k` in a traceless diagonal matrix is the partial sum
/// of its first `k` diagonal entries.
fn ample_witness(g: &StructureConstantAlgebra, n: usize, root_count: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let f = g.field();
    let mut h = g.zero_vector();
    let mut partial = 0i64;
    for k in 0..n - 1 {
        partial += n as i64 + 1 - 2 * (k as i64 + 1);
        h[root_count + k] = f.from_i64(partial);
    }
    let mut y = g.zero_vector();
    for slot in y.iter_mut().take(root_count) {
        *slot = f.one();
    }
    (h, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gl, heisenberg, s2, sl, Composition};
    use crate::scalar::Field;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn fixture_verdicts() {
        let cfg = AnalysisConfig::default();
        let v = verdict(&sl(&q(), 2).unwrap(), &cfg).unwrap();
        assert_eq!((v.verdict, v.rule), (Verdict::Ua, Rule::CCondition));
        let v = verdict(&s2(&q()), &cfg).unwrap();
        assert_eq!((v.verdict, v.rule), (Verdict::Ua, Rule::CCondition));
        let v = verdict(&gl(&q(), 2).unwrap(), &cfg).unwrap();
        assert_eq!((v.verdict, v.rule), (Verdict::NotUa, Rule::NegCase2));
        let v = verdict(&heisenberg(&q(), 1), &cfg).unwrap();
        assert_eq!((v.verdict, v.rule), (Verdict::NotUa, Rule::NegCase3));
    }

    #[test]
    fn finite_fields_never_give_ua() {
        let cfg = AnalysisConfig::default();
        let v = verdict(&s2(&Field::prime(5).unwrap()), &cfg).unwrap();
        assert_ne!(v.verdict, Verdict::Ua);
        assert!(v.note.is_some());
    }

    #[test]
    fn seaweed_examples() {
        let cfg = AnalysisConfig::default();
        let c = |v: &[usize]| Composition::new(v.to_vec()).unwrap();
        let spec = SeaweedSpec::new(4, c(&[2, 2]), c(&[2, 2]), q()).unwrap();
        let (v, a) = seaweed_verdict(&spec, &cfg).unwrap();
        assert!(!a.ample);
        assert_eq!(v.verdict, Verdict::NotUa);
        assert_eq!(v.center_dim, 1);
        let spec = SeaweedSpec::new(3, c(&[1, 1, 1]), c(&[3]), q()).unwrap();
        let (v, a) = seaweed_verdict(&spec, &cfg).unwrap();
        assert!(a.ample);
        assert_eq!((v.verdict, v.rule), (Verdict::Ua, Rule::AmpleSeaweed));
    }
}
