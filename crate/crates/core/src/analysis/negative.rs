//! Explicit commutator-preserving, non-additive swaps for algebras with a
//! nontrivial center that are not perfect.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::lie::StructureConstantAlgebra;
use crate::linalg::{add_vec, is_zero_vec, sub_vec, Subspace};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NegativeCase {
    /// Commutative ring: swap any two distinct nonzero elements.
    Commutative = 1,
    /// Center meets the derived algebra trivially: swap `a + z1 ↔ a + z2`.
    CenterOffDerived = 2,
    /// Center meets the derived algebra: swap `a ↔ a + z`.
    CenterInDerived = 3,
}

impl NegativeCase {
    pub fn number(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BijectionKind {
    SwapPair,
    InjectionWithTail,
}

impl fmt::Display for BijectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BijectionKind::SwapPair => "SwapPair",
            BijectionKind::InjectionWithTail => "InjectionWithTail",
        })
    }
}

/// One identity the construction relies on, with its checked truth value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obligation {
    pub statement: String,
    pub holds: bool,
}

/// The map fixing everything except `u ↔ v`, with a pair `(u, c)` on which
/// it is not additive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BijectionDescription {
    pub kind: BijectionKind,
    pub case: NegativeCase,
    pub u: Vec<Scalar>,
    pub v: Vec<Scalar>,
    /// `α(u + c) = u + c` while `α(u) + α(c) = v + c`.
    pub additivity_witness: (Vec<Scalar>, Vec<Scalar>),
    pub obligations: Vec<Obligation>,
}

impl BijectionDescription {
    pub fn verified(&self) -> bool {
        self.obligations.iter().all(|o| o.holds)
    }

    /// Applies the swap.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        if x == self.u.as_slice() {
            self.v.clone()
        } else if x == self.v.as_slice() {
            self.u.clone()
        } else {
            x.to_vec()
        }
    }
}

/// Cardinality of `field^dim`, `None` when infinite or beyond u128.
fn cardinality(field: &Field, dim: usize) -> Option<u128> {
    if dim == 0 {
        return Some(1);
    }
    field.order()?.checked_pow(dim as u32)
}

/// Whether `|field^dim| > bound`.
fn exceeds(field: &Field, dim: usize, bound: u128) -> bool {
    cardinality(field, dim).is_none_or(|c| c > bound)
}

/// A vector outside `excluded`, taken from a fixed list of five distinct
/// nonzero vectors (enough when the space has more than four elements).
fn pick_outside(field: &Field, dim: usize, excluded: &[&[Scalar]]) -> Option<Vec<Scalar>> {
    let candidates: Vec<Vec<Scalar>> = if field.is_finite() {
        super::finite_vectors(field, dim)?.skip(1).take(5).collect()
    } else {
        (1..=5)
            .map(|k| {
                let mut v = alloc::vec![field.zero(); dim];
                v[0] = field.from_i64(k);
                v
            })
            .collect()
    };
    candidates.into_iter().find(|c| excluded.iter().all(|e| *e != c.as_slice()))
}

/// A scalar multiple of `z` different from `z` and from 0.
fn second_central(field: &Field, z: &[Scalar]) -> Option<Vec<Scalar>> {
    let c = if field.is_rationals() { field.from_i64(2) } else { field.nontrivial_element()? };
    Some(z.iter().map(|x| field.mul(&c, x)).collect())
}

/// Applies the negative criterion. `None` when its hypotheses fail.
pub fn negative_criterion(g: &StructureConstantAlgebra) -> Option<BijectionDescription> {
    let f = g.field();
    let n = g.dim();
    if !exceeds(f, n, 4) {
        return None;
    }
    let derived = g.derived_subalgebra();
    let center = g.center();
    if derived.is_full() || center.is_zero() {
        return None;
    }
    let meet = center.intersect(&derived).expect("same ambient space");
    if meet.is_zero() && !exceeds(f, center.dim(), 2) {
        return None;
    }
    let (case, u, v) = if g.structure_constants().is_empty() {
        let a = g.basis_vector(0);
        let b = if n >= 2 { g.basis_vector(1) } else { second_central(f, &a)? };
        (NegativeCase::Commutative, a, b)
    } else if meet.is_zero() {
        let a = derived.basis_vectors().swap_remove(0);
        let zs = center.basis_vectors();
        let z1 = zs[0].clone();
        let z2 = if zs.len() >= 2 { zs[1].clone() } else { second_central(f, &z1)? };
        (NegativeCase::CenterOffDerived, add_vec(f, &a, &z1), add_vec(f, &a, &z2))
    } else {
        let z = meet.basis_vectors().swap_remove(0);
        let a = (0..n).map(|i| g.basis_vector(i)).find(|e| !derived.contains(e)).expect("derived algebra is proper");
        let az = add_vec(f, &a, &z);
        (NegativeCase::CenterInDerived, a, az)
    };
    let diff = sub_vec(f, &v, &u);
    let zero = g.zero_vector();
    let c = pick_outside(f, n, &[&zero, &u, &v, &diff])?;
    let obligations = obligations(g, &derived, case, &u, &v, &c);
    let additivity_witness = (u.clone(), c);
    Some(BijectionDescription { kind: BijectionKind::SwapPair, case, u, v, additivity_witness, obligations })
}

fn obligations(
    g: &StructureConstantAlgebra,
    derived: &Subspace,
    case: NegativeCase,
    u: &[Scalar],
    v: &[Scalar],
    c: &[Scalar],
) -> Vec<Obligation> {
    let f = g.field();
    let mut out = Vec::new();
    let u_name = g.describe(u);
    let v_name = g.describe(v);
    if case == NegativeCase::Commutative {
        out.push(Obligation { statement: "all brackets vanish".into(), holds: g.structure_constants().is_empty() });
    } else {
        let same = (0..g.dim()).all(|i| {
            let x = g.basis_vector(i);
            g.bracket_unchecked(&x, u) == g.bracket_unchecked(&x, v)
        });
        out.push(Obligation { statement: format!("[x, {u_name}] = [x, {v_name}] for every basis x"), holds: same });
        out.push(Obligation { statement: format!("[{u_name}, {v_name}] = 0"), holds: is_zero_vec(f, &g.bracket_unchecked(u, v)) });
        out.push(Obligation { statement: format!("{u_name} not in [g,g]"), holds: !derived.contains(u) });
        out.push(Obligation { statement: format!("{v_name} not in [g,g]"), holds: !derived.contains(v) });
    }
    out.push(Obligation {
        statement: format!("{u_name} != {v_name}, both nonzero"),
        holds: u != v && !is_zero_vec(f, u) && !is_zero_vec(f, v),
    });
    // α(u + c) = u + c because u + c avoids both swapped points.
    let uc = add_vec(f, u, c);
    let image_sum = if uc.as_slice() == u {
        v.to_vec()
    } else if uc.as_slice() == v {
        u.to_vec()
    } else {
        uc.clone()
    };
    let fixed_c = c != u && c != v;
    let split = add_vec(f, v, c);
    out.push(Obligation {
        statement: format!("α({u_name} + c) != α({u_name}) + α(c) for c = {}", g.describe(c)),
        holds: fixed_c && image_sum != split,
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{abelian, gl, heisenberg, sl};

    #[test]
    fn gl2_is_case_two() {
        let d = negative_criterion(&gl(&Field::rationals(), 2).unwrap()).unwrap();
        assert_eq!(d.case, NegativeCase::CenterOffDerived);
        assert!(d.verified());
    }

    #[test]
    fn heisenberg_over_f3_is_case_three() {
        let d = negative_criterion(&heisenberg(&Field::prime(3).unwrap(), 1)).unwrap();
        assert_eq!(d.case, NegativeCase::CenterInDerived);
        assert!(d.verified());
    }

    #[test]
    fn sl2_and_small_rings_are_out_of_reach() {
        assert!(negative_criterion(&sl(&Field::rationals(), 2).unwrap()).is_none());
        // F_2^2 has only four elements.
        assert!(negative_criterion(&abelian(&Field::prime(2).unwrap(), 2)).is_none());
        let d = negative_criterion(&abelian(&Field::rationals(), 1)).unwrap();
        assert_eq!(d.case, NegativeCase::Commutative);
        assert!(d.verified());
    }

    #[test]
    fn swap_breaks_additivity_on_witness() {
        let g = abelian(&Field::prime(5).unwrap(), 1);
        let d = negative_criterion(&g).unwrap();
        let f = g.field();
        let (a, c) = &d.additivity_witness;
        assert_ne!(d.apply(&add_vec(f, a, c)), add_vec(f, &d.apply(a), &d.apply(c)));
    }
}
