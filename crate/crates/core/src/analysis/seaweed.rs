//! Ampleness of root sets in sl_n and suitable pairs `(g, h)`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AnalysisError;
use crate::constructions::RootSet;
use crate::lie::StructureConstantAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmpleReport {
    pub ample: bool,
    /// Rank of the root vectors `e_i - e_j`.
    pub span_dim: usize,
    /// Connected components of the graph on `1..=n` with one edge per root.
    pub components: usize,
}

pub fn check_ample(roots: &RootSet, n: usize) -> AmpleReport {
    let q = Field::rationals();
    let rows: Vec<Vec<Scalar>> = roots
        .iter()
        .map(|&(i, j)| {
            let mut r = vec![q.zero(); n];
            r[i - 1] = q.one();
            r[j - 1] = q.from_i64(-1);
            r
        })
        .collect();
    let span_dim = if rows.is_empty() { 0 } else { Matrix::from_rows(q, n, rows).expect("rows of length n").rank() };

    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let mut components = n;
    for &(i, j) in roots {
        let (a, b) = (find(&mut parent, i - 1), find(&mut parent, j - 1));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    assert_eq!(span_dim, n - components, "root rank must match graph components");
    AmpleReport { ample: span_dim + 1 == n, span_dim, components }
}

/// A joint eigenspace of `ad h` with its weight on the basis of `h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpace {
    pub weight: Vec<Scalar>,
    pub space: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuitableReport {
    /// `ad h` splits into joint eigenspaces with weights in the field.
    pub diagonalizable: bool,
    pub weights: Vec<WeightSpace>,
    /// The nonzero weights have no common kernel on `h`.
    pub joint_kernel_trivial: bool,
    pub zero_weight_is_h: bool,
    pub suitable: bool,
}

/// Largest |coefficient| whose divisors are enumerated by trial division.
const DIVISOR_CAP: u128 = 1 << 40;
/// Largest field order scanned for eigenvalues.
const FINITE_EIGEN_CAP: u128 = 1 << 16;

pub fn check_suitable_pair(g: &StructureConstantAlgebra, h: &Subspace) -> Result<SuitableReport, AnalysisError> {
    if h.ambient_dim() != g.dim() || h.field() != g.field() {
        return Err(AnalysisError::AmbientMismatch);
    }
    let f = g.field();
    let hb = h.basis_vectors();
    for (i, x) in hb.iter().enumerate() {
        for y in &hb[i + 1..] {
            if !g.bracket_unchecked(x, y).iter().all(|c| f.is_zero(c)) {
                return Err(AnalysisError::NotCommutative);
            }
        }
    }
    let not_diagonalizable = SuitableReport {
        diagonalizable: false,
        weights: Vec::new(),
        joint_kernel_trivial: false,
        zero_weight_is_h: false,
        suitable: false,
    };

    let mut pieces = vec![WeightSpace { weight: Vec::new(), space: Subspace::full(f, g.dim()) }];
    for t in &hb {
        let ad = g.ad_unchecked(t);
        let eigen = eigenspaces(&ad)?;
        if eigen.iter().map(|(_, s)| s.dim()).sum::<usize>() != g.dim() {
            return Ok(not_diagonalizable);
        }
        let mut next = Vec::new();
        for piece in &pieces {
            for (lambda, space) in &eigen {
                let meet = piece.space.intersect(space)?;
                if !meet.is_zero() {
                    let mut weight = piece.weight.clone();
                    weight.push(lambda.clone());
                    next.push(WeightSpace { weight, space: meet });
                }
            }
        }
        pieces = next;
    }
    if pieces.iter().map(|p| p.space.dim()).sum::<usize>() != g.dim() {
        return Ok(not_diagonalizable);
    }
    let nonzero: Vec<Vec<Scalar>> = pieces.iter().filter(|p| !p.weight.iter().all(|c| f.is_zero(c))).map(|p| p.weight.clone()).collect();
    let joint_kernel_trivial =
        hb.is_empty() || (!nonzero.is_empty() && Matrix::from_rows(f.clone(), hb.len(), nonzero)?.rank() == hb.len());
    let zero_weight_is_h = pieces.iter().find(|p| p.weight.iter().all(|c| f.is_zero(c))).map_or(h.is_zero(), |p| &p.space == h);
    Ok(SuitableReport {
        diagonalizable: true,
        suitable: joint_kernel_trivial && zero_weight_is_h,
        weights: pieces,
        joint_kernel_trivial,
        zero_weight_is_h,
    })
}

/// Eigenvalues of `m` lying in its field, each with its eigenspace.
pub fn eigenspaces(m: &Matrix) -> Result<Vec<(Scalar, Subspace)>, AnalysisError> {
    let f = m.field();
    let n = m.rows();
    let candidates: Vec<Scalar> = match f.order() {
        Some(q) if q <= FINITE_EIGEN_CAP => (0..q as u64).map(|i| f.element(i).expect("index below order")).collect(),
        Some(_) => return Err(AnalysisError::EigenvalueSearchTooLarge),
        None => rational_roots(&characteristic_polynomial(m))?.into_iter().map(Scalar::Rational).collect(),
    };
    let mut out = Vec::new();
    for lambda in candidates {
        let shifted = m.sub(&Matrix::identity(f, n).scale(&lambda))?;
        let space = shifted.kernel();
        if !space.is_zero() {
            out.push((lambda, space));
        }
    }
    Ok(out)
}

/// Coefficients `c_0..c_n` (constant first) of `det(xI - m)` over Q, by
/// the Faddeev–LeVerrier recursion.
pub fn characteristic_polynomial(m: &Matrix) -> Vec<BigRational> {
    let n = m.rows();
    let a: Vec<Vec<BigRational>> = (0..n).map(|i| (0..n).map(|j| as_rational(m.get(i, j))).collect()).collect();
    let mut coeffs = vec![BigRational::zero(); n + 1];
    coeffs[n] = BigRational::one();
    let mut mk = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigRational::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !mk[l][j].is_zero() {
                        s += &a[i][l] * &mk[l][j];
                    }
                }
                if i == j {
                    s += &coeffs[n - k + 1];
                }
                next[i][j] = s;
            }
        }
        mk = next;
        let mut trace = BigRational::zero();
        for i in 0..n {
            for l in 0..n {
                if !a[i][l].is_zero() && !mk[l][i].is_zero() {
                    trace += &a[i][l] * &mk[l][i];
                }
            }
        }
        coeffs[n - k] = -trace / BigRational::from_integer(BigInt::from(k));
    }
    coeffs
}

fn as_rational(s: &Scalar) -> BigRational {
    match s {
        Scalar::Rational(r) => r.clone(),
        _ => panic!("characteristic polynomial is computed over Q"),
    }
}

/// Distinct rational roots, ascending.
pub fn rational_roots(coeffs: &[BigRational]) -> Result<Vec<BigRational>, AnalysisError> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    let Some(low) = ints.iter().position(|c| !c.is_zero()) else {
        return Ok(roots);
    };
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let ints = &ints[low..];
    if ints.len() == 1 {
        return Ok(roots);
    }
    let ps = divisors(&ints[0])?;
    let qs = divisors(ints.last().expect("nonempty"))?;
    let mut found = Vec::new();
    for p in &ps {
        for q in &qs {
            for sign in [1i32, -1] {
                let r = BigRational::new(BigInt::from(sign) * p, q.clone());
                if !found.contains(&r) && evaluate(ints, &r).is_zero() {
                    found.push(r);
                }
            }
        }
    }
    roots.extend(found);
    roots.sort();
    Ok(roots)
}

fn evaluate(ints: &[BigInt], x: &BigRational) -> BigRational {
    ints.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

fn divisors(v: &BigInt) -> Result<Vec<BigInt>, AnalysisError> {
    let m = v.abs().to_u128().filter(|&m| m <= DIVISOR_CAP).ok_or(AnalysisError::EigenvalueSearchTooLarge)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u128;
    while d * d <= m {
        if m % d == 0 {
            small.push(BigInt::from(d));
            if d * d != m {
                large.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_seaweed, heisenberg, included_roots, sl, Composition, SeaweedSpec};

    fn q() -> Field {
        Field::rationals()
    }

    fn roots(n: usize, top: &[usize], bottom: &[usize]) -> RootSet {
        let spec = SeaweedSpec::new(n, Composition::new(top.to_vec()).unwrap(), Composition::new(bottom.to_vec()).unwrap(), q()).unwrap();
        included_roots(&spec)
    }

    #[test]
    fn ample_examples() {
        assert_eq!(check_ample(&roots(3, &[2, 1], &[1, 2]), 3), AmpleReport { ample: true, span_dim: 2, components: 1 });
        assert_eq!(check_ample(&roots(2, &[1, 1], &[1, 1]), 2), AmpleReport { ample: false, span_dim: 0, components: 2 });
        assert_eq!(check_ample(&roots(4, &[2, 2], &[2, 2]), 4), AmpleReport { ample: false, span_dim: 2, components: 2 });
    }

    #[test]
    fn sl2_cartan_is_suitable() {
        let g = sl(&q(), 2).unwrap();
        let h = Subspace::span(&q(), 3, vec![g.basis_vector(1)]).unwrap();
        let r = check_suitable_pair(&g, &h).unwrap();
        assert!(r.suitable);
        let ws: Vec<Scalar> = r.weights.iter().map(|w| w.weight[0].clone()).collect();
        let expect: Vec<Scalar> = [-2, 0, 2].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(ws.len(), 3);
        for e in expect {
            assert!(ws.contains(&e));
        }
    }

    #[test]
    fn heisenberg_center_is_not_suitable() {
        let g = heisenberg(&q(), 1);
        let h = Subspace::span(&q(), 3, vec![g.basis_vector(2)]).unwrap();
        let r = check_suitable_pair(&g, &h).unwrap();
        assert!(r.diagonalizable);
        assert!(!r.zero_weight_is_h);
        assert!(!r.suitable);
    }

    #[test]
    fn seaweed_cartan_is_suitable() {
        let spec = SeaweedSpec::new(3, Composition::new(vec![2, 1]).unwrap(), Composition::new(vec![1, 2]).unwrap(), q()).unwrap();
        let g = build_seaweed(&spec).unwrap();
        let h = Subspace::span(&q(), 4, vec![g.basis_vector(2), g.basis_vector(3)]).unwrap();
        assert!(check_suitable_pair(&g, &h).unwrap().suitable);
    }

    #[test]
    fn nilpotent_action_is_not_diagonalizable() {
        let g = heisenberg(&q(), 1);
        let h = Subspace::span(&q(), 3, vec![g.basis_vector(0)]).unwrap();
        assert!(!check_suitable_pair(&g, &h).unwrap().diagonalizable);
    }

    #[test]
    fn roots_of_shifted_cubic() {
        // (x - 1/2)(x + 3)x = x^3 + 5/2 x^2 - 3/2 x
        let c = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let r = rational_roots(&[c(0, 1), c(-3, 2), c(5, 2), c(1, 1)]).unwrap();
        assert_eq!(r, vec![c(-3, 1), c(0, 1), c(1, 2)]);
    }
}
