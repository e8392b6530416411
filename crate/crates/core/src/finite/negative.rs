//! The swap bijections of the negative criterion as explicit permutations.

use alloc::format;
use alloc::vec::Vec;

use super::{FiniteError, FiniteLieRing};
use crate::analysis::NegativeCase;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteNegativeReport {
    pub case: NegativeCase,
    /// Permutation of labels exchanging `u` and `v`.
    pub table: Vec<u32>,
    pub u: usize,
    pub v: usize,
    /// Result of the full `N × N` scan.
    pub commutators_preserved: bool,
    /// `(a, b)` with `α(a + b) ≠ α(a) + α(b)`, found by scanning.
    pub additivity_witness: Option<(usize, usize)>,
}

impl FiniteNegativeReport {
    pub fn verified(&self) -> bool {
        self.commutators_preserved && self.additivity_witness.is_some()
    }
}

pub fn negative_bijection_finite(r: &FiniteLieRing) -> Result<FiniteNegativeReport, FiniteError> {
    let n = r.order();
    if n <= 4 {
        return Err(FiniteError::HypothesesNotMet(format!("ring has only {n} elements")));
    }
    let derived = r.derived();
    let center = r.center();
    if derived.len() == n {
        return Err(FiniteError::HypothesesNotMet("ring is perfect".into()));
    }
    if center.len() == 1 {
        return Err(FiniteError::HypothesesNotMet("center is trivial".into()));
    }
    let meet: Vec<usize> = center.iter().copied().filter(|x| derived.binary_search(x).is_ok()).collect();
    if meet.len() == 1 && center.len() <= 2 {
        return Err(FiniteError::HypothesesNotMet("center meets [R,R] trivially and has two elements".into()));
    }
    let (case, u, v) = if r.is_commutative() {
        (NegativeCase::Commutative, 1, 2)
    } else if meet.len() == 1 {
        let a = derived[1];
        let (z1, z2) = (center[1], center[2]);
        (NegativeCase::CenterOffDerived, r.add(a, z1), r.add(a, z2))
    } else {
        let z = meet[1];
        let a = (0..n).find(|x| derived.binary_search(x).is_err()).expect("derived subring is proper");
        (NegativeCase::CenterInDerived, a, r.add(a, z))
    };
    let mut table: Vec<u32> = (0..n as u32).collect();
    table.swap(u, v);
    Ok(FiniteNegativeReport {
        case,
        commutators_preserved: r.preserves_commutators(r, &table),
        additivity_witness: r.additivity_failure(r, &table),
        table,
        u,
        v,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{gl, heisenberg};
    use crate::finite::FROM_ALGEBRA_CAP;
    use crate::scalar::Field;

    #[test]
    fn heisenberg_f2_case_three() {
        let h = FiniteLieRing::from_algebra(&heisenberg(&Field::prime(2).unwrap(), 1), FROM_ALGEBRA_CAP).unwrap();
        let rep = negative_bijection_finite(&h).unwrap();
        assert_eq!(rep.case, NegativeCase::CenterInDerived);
        assert!(rep.verified());
        // x = 1, z = 4: swap x with x + z.
        assert_eq!((rep.u, rep.v), (1, 5));
    }

    #[test]
    fn gl2_f3_case_two() {
        let g = FiniteLieRing::from_algebra(&gl(&Field::prime(3).unwrap(), 2).unwrap(), FROM_ALGEBRA_CAP).unwrap();
        let rep = negative_bijection_finite(&g).unwrap();
        assert_eq!(rep.case, NegativeCase::CenterOffDerived);
        assert!(rep.verified());
    }

    #[test]
    fn z8_case_one_and_small_rings_refused() {
        let rep = negative_bijection_finite(&FiniteLieRing::cyclic_ring(8).unwrap()).unwrap();
        assert_eq!(rep.case, NegativeCase::Commutative);
        assert!(rep.verified());
        assert!(negative_bijection_finite(&FiniteLieRing::cyclic_ring(4).unwrap()).is_err());
    }
}
