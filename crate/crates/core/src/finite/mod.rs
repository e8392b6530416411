//! Finite Lie rings as explicit tables, with exhaustive searches over
//! commutator-preserving bijections.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::lie::StructureConstantAlgebra;
use crate::scalar::{Field, Scalar, ScalarError};

mod enumerate;
mod negative;
mod semigroup;

pub use enumerate::{
    commutator_bijections, for_each_commutator_bijection, is_wua, ua_against, AgainstReport, BijectionCount, Counterexample, SearchStats,
    WuaReport,
};
pub use negative::{negative_bijection_finite, FiniteNegativeReport};
pub use semigroup::{euler_phi, semigroup_aut_report, NonAdditiveAutomorphism, SemigroupReport, SEMIGROUP_CAP};

/// Largest ring order accepted by [`FiniteLieRing::from_algebra`].
pub const FROM_ALGEBRA_CAP: u128 = 1 << 10;
/// Rings up to this order are axiom-checked when built from an algebra.
pub const VALIDATE_LIMIT: usize = 128;
/// Largest ring order for bijection enumeration.
pub const ENUMERATION_CAP: usize = 32;
/// Number of defects a validation report keeps.
const DEFECT_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiniteError {
    #[error("ring of order {order} exceeds the cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("order {order} is too large for enumeration (cap {cap})")]
    TooLarge { order: usize, cap: usize },
    #[error("orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("ring axioms fail: {0}")]
    InvalidRing(String),
    #[error("hypotheses not met: {0}")]
    HypothesesNotMet(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Labels `0..N` with 0 the additive identity; tables are row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLieRing {
    order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    bracket: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RingReport {
    pub defects: Vec<String>,
}

impl RingReport {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }

    fn push(&mut self, d: String) -> bool {
        self.defects.push(d);
        self.defects.len() >= DEFECT_LIMIT
    }
}

impl FiniteLieRing {
    /// Builds a ring from its tables; negation is read off the addition table.
    /// Only the shape is checked here, see [`FiniteLieRing::validate`].
    pub fn new(order: usize, add: Vec<u32>, bracket: Vec<u32>) -> Result<FiniteLieRing, FiniteError> {
        if order == 0 {
            return Err(FiniteError::InvalidTable("order must be at least 1".into()));
        }
        for (name, t) in [("add", &add), ("bracket", &bracket)] {
            if t.len() != order * order {
                return Err(FiniteError::InvalidTable(format!("{name} table needs {order}x{order} entries")));
            }
            if t.iter().any(|&x| x as usize >= order) {
                return Err(FiniteError::InvalidTable(format!("{name} table has a label outside 0..{order}")));
            }
        }
        let mut neg = vec![0u32; order];
        for (a, slot) in neg.iter_mut().enumerate() {
            *slot = (0..order as u32)
                .find(|&b| add[a * order + b as usize] == 0)
                .ok_or_else(|| FiniteError::InvalidTable(format!("element {a} has no additive inverse")))?;
        }
        Ok(FiniteLieRing { order, add, neg, bracket })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn bracket(&self, a: usize, b: usize) -> usize {
        self.bracket[a * self.order + b] as usize
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.add(a, b)).collect()).collect()
    }

    pub fn bracket_table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.bracket(a, b)).collect()).collect()
    }

    /// Exhaustive check of the abelian group axioms, biadditivity,
    /// `[x,x] = 0` and Jacobi.
    pub fn validate(&self) -> RingReport {
        let n = self.order;
        let mut r = RingReport::default();
        let mut full = false;
        'group: for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                full = r.push(format!("0 is not neutral for {a}"));
            }
            if self.add(a, self.neg(a)) != 0 {
                full = r.push(format!("{a} has no inverse"));
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    full = r.push(format!("{a}+{b} is not commutative"));
                }
                if full {
                    break 'group;
                }
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) && r.push(format!("({a}+{b})+{c} is not associative")) {
                        break 'group;
                    }
                }
            }
        }
        if !r.is_valid() {
            return r;
        }
        'lie: for a in 0..n {
            if self.bracket(a, a) != 0 && r.push(format!("[{a},{a}] != 0")) {
                break;
            }
            for b in 0..n {
                let ab = self.bracket(a, b);
                for c in 0..n {
                    let left = self.bracket(self.add(a, b), c) != self.add(self.bracket(a, c), self.bracket(b, c));
                    if left && r.push(format!("[{a}+{b},{c}] is not additive")) {
                        break 'lie;
                    }
                    if self.bracket(c, self.add(a, b)) != self.add(self.bracket(c, a), self.bracket(c, b))
                        && r.push(format!("[{c},{a}+{b}] is not additive"))
                    {
                        break 'lie;
                    }
                    let jacobi =
                        self.add(self.add(self.bracket(a, self.bracket(b, c)), self.bracket(b, self.bracket(c, a))), self.bracket(c, ab));
                    if jacobi != 0 && r.push(format!("Jacobi fails on ({a},{b},{c})")) {
                        break 'lie;
                    }
                }
            }
        }
        r
    }

    /// `Z/m` with zero bracket.
    pub fn cyclic_ring(m: usize) -> Result<FiniteLieRing, FiniteError> {
        if m == 0 {
            return Err(FiniteError::InvalidTable("modulus must be at least 1".into()));
        }
        let add = (0..m * m).map(|k| ((k / m + k % m) % m) as u32).collect();
        FiniteLieRing::new(m, add, vec![0; m * m])
    }

    /// Componentwise sum; label `a·|s| + b` stands for `(a, b)`.
    pub fn direct_product(r: &FiniteLieRing, s: &FiniteLieRing) -> Result<FiniteLieRing, FiniteError> {
        let (nr, ns) = (r.order, s.order);
        let n = nr * ns;
        if n > ENUMERATION_CAP * ENUMERATION_CAP {
            return Err(FiniteError::CapExceeded { order: n as u128, cap: (ENUMERATION_CAP * ENUMERATION_CAP) as u128 });
        }
        let split = |x: usize| (x / ns, x % ns);
        let mut add = vec![0u32; n * n];
        let mut bracket = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let ((a, b), (c, d)) = (split(x), split(y));
                add[x * n + y] = (r.add(a, c) * ns + s.add(b, d)) as u32;
                bracket[x * n + y] = (r.bracket(a, c) * ns + s.bracket(b, d)) as u32;
            }
        }
        FiniteLieRing::new(n, add, bracket)
    }

    /// Tables of an algebra over a finite field. Label `i` is the vector whose
    /// coordinates are the base-`q` digits of `i`, coordinate 0 lowest.
    pub fn from_algebra(g: &StructureConstantAlgebra, cap: u128) -> Result<FiniteLieRing, FiniteError> {
        let coding = ElementCoding::new(g.field().clone(), g.dim(), cap)?;
        let n = coding.size;
        let vectors: Vec<Vec<Scalar>> = (0..n).map(|i| coding.vector(i)).collect();
        let mut add = vec![0u32; n * n];
        let mut bracket = vec![0u32; n * n];
        let f = g.field();
        for x in 0..n {
            for y in 0..n {
                let sum: Vec<Scalar> = vectors[x].iter().zip(&vectors[y]).map(|(a, b)| f.add(a, b)).collect();
                add[x * n + y] = coding.label(&sum) as u32;
                if y > x {
                    let b = g.bracket_unchecked(&vectors[x], &vectors[y]);
                    let nb: Vec<Scalar> = b.iter().map(|c| f.neg(c)).collect();
                    bracket[x * n + y] = coding.label(&b) as u32;
                    bracket[y * n + x] = coding.label(&nb) as u32;
                }
            }
        }
        let ring = FiniteLieRing::new(n, add, bracket)?;
        if n <= VALIDATE_LIMIT {
            let report = ring.validate();
            if !report.is_valid() {
                return Err(FiniteError::InvalidRing(report.defects.join("; ")));
            }
        }
        Ok(ring)
    }

    pub fn is_commutative(&self) -> bool {
        self.bracket.iter().all(|&x| x == 0)
    }

    /// Elements commuting with everything, ascending.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.bracket(a, b) == 0)).collect()
    }

    /// Additive subgroup generated by all brackets, ascending.
    pub fn derived(&self) -> Vec<usize> {
        let gens: BTreeSet<usize> = self.bracket.iter().map(|&x| x as usize).collect();
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.add(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    /// First pair `(a, b)` with `α(a + b) ≠ α(a) + α(b)`, `α` mapping this ring into `target`.
    pub fn additivity_failure(&self, target: &FiniteLieRing, alpha: &[u32]) -> Option<(usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                if alpha[self.add(a, b)] as usize != target.add(alpha[a] as usize, alpha[b] as usize) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Whether `α` maps brackets of this ring to brackets of `target` on every pair.
    pub fn preserves_commutators(&self, target: &FiniteLieRing, alpha: &[u32]) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| alpha[self.bracket(a, b)] as usize == target.bracket(alpha[a] as usize, alpha[b] as usize)))
    }
}

/// Bijection between labels `0..q^dim` and coordinate vectors over `field`.
#[derive(Debug, Clone)]
pub struct ElementCoding {
    field: Field,
    dim: usize,
    q: u64,
    size: usize,
}

impl ElementCoding {
    pub fn new(field: Field, dim: usize, cap: u128) -> Result<ElementCoding, FiniteError> {
        let q = field.order().ok_or_else(|| FiniteError::UnsupportedField(format!("{field} is infinite")))?;
        let size = q
            .checked_pow(dim as u32)
            .filter(|&s| s <= cap)
            .ok_or(FiniteError::CapExceeded { order: q.checked_pow(dim as u32).unwrap_or(u128::MAX), cap })?;
        Ok(ElementCoding { field, dim, q: q as u64, size: size as usize })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vector(&self, mut label: usize) -> Vec<Scalar> {
        (0..self.dim)
            .map(|_| {
                let d = label as u64 % self.q;
                label /= self.q as usize;
                self.field.element(d).expect("digit below order")
            })
            .collect()
    }

    pub fn label(&self, v: &[Scalar]) -> usize {
        v.iter().rev().fold(0usize, |acc, c| acc * self.q as usize + self.field.index_of(c).expect("element of the field") as usize)
    }
}
