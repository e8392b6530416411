//! A commutator-preserving injection `g → g ⊕ ⟨z⟩` that is not additive,
//! available whenever `g` is not perfect and the field has three elements.

use alloc::vec::Vec;

use super::{random_vector, AnalysisConfig, AnalysisError};
use crate::constructions::{abelian, direct_sum};
use crate::lie::StructureConstantAlgebra;
use crate::linalg::{add_vec, CoordinateSystem};
use crate::rng::{child_seed, stream, XorShift64Star};
use crate::scalar::{Field, Scalar};

/// `β(x) = (x, γ(a_1))`, where `a_1` is the coordinate of `x` along the first
/// vector of an adapted basis and `γ` sends 0 to 0 and everything else to 1.
#[derive(Debug, Clone)]
pub struct TailInjection {
    field: Field,
    coords: CoordinateSystem,
    /// First vector outside `[g,g]`, then a basis of `[g,g]`, then the rest.
    pub adapted_basis: Vec<Vec<Scalar>>,
}

impl TailInjection {
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let a1 = self.coords.coordinates(x).expect("adapted basis spans g").swap_remove(0);
        let mut out = x.to_vec();
        out.push(if f.is_zero(&a1) { f.zero() } else { f.one() });
        out
    }
}

#[derive(Debug, Clone)]
pub struct InjectionReport {
    /// `g ⊕ ⟨z⟩` with `z` last.
    pub s: StructureConstantAlgebra,
    pub map: TailInjection,
    pub samples_checked: usize,
    pub commutators_preserved: bool,
    /// `(x, y)` with `β(x + y) ≠ β(x) + β(y)`.
    pub additivity_witness: (Vec<Scalar>, Vec<Scalar>),
    pub witness_verified: bool,
}

pub fn lemma_10_1_injection(g: &StructureConstantAlgebra, config: &AnalysisConfig) -> Result<InjectionReport, AnalysisError> {
    let f = g.field();
    if f.order() == Some(2) {
        return Err(AnalysisError::FieldTooSmall);
    }
    let derived = g.derived_subalgebra();
    if derived.is_full() {
        return Err(AnalysisError::PerfectAlgebra);
    }
    let n = g.dim();
    let first = (0..n).map(|i| g.basis_vector(i)).find(|e| !derived.contains(e)).expect("derived algebra is proper");
    let mut adapted = alloc::vec![first.clone()];
    adapted.extend(derived.basis_vectors());
    for i in 0..n {
        let e = g.basis_vector(i);
        let mut trial = adapted.clone();
        trial.push(e);
        if CoordinateSystem::new(f, n, &trial).is_ok() {
            adapted = trial;
        }
    }
    let coords = CoordinateSystem::new(f, n, &adapted)?;
    let map = TailInjection { field: f.clone(), coords, adapted_basis: adapted };
    let s = direct_sum(g, &abelian(f, 1).with_name("z"))?;

    let mut rng = XorShift64Star::new(child_seed(config.seed, stream::INJECTION));
    let mut preserved = true;
    for _ in 0..config.samples {
        let x = random_vector(f, n, &mut rng, config.bound);
        let y = random_vector(f, n, &mut rng, config.bound);
        let lhs = map.apply(&g.bracket_unchecked(&x, &y));
        let rhs = s.bracket_unchecked(&map.apply(&x), &map.apply(&y));
        preserved &= lhs == rhs;
    }

    // x1 + x1 works unless 2 = 0; then x1 + c·x1 with c outside {0, 1}.
    let c = if f.characteristic() == 2 { f.nontrivial_element().expect("field has more than two elements") } else { f.one() };
    let second: Vec<Scalar> = first.iter().map(|v| f.mul(&c, v)).collect();
    let whole = map.apply(&add_vec(f, &first, &second));
    let parts = add_vec(f, &map.apply(&first), &map.apply(&second));
    Ok(InjectionReport {
        s,
        map,
        samples_checked: config.samples,
        commutators_preserved: preserved,
        additivity_witness: (first, second),
        witness_verified: whole != parts,
    })
}
