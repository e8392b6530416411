//! Bijections of `F_q` fixing 0 and 1 that preserve multiplication.
//!
//! Such a map is determined by the image of a generator `g` of `F_q^*`, and
//! every candidate image is tried and checked on all products.

use alloc::vec;
use alloc::vec::Vec;

use super::FiniteError;
use crate::scalar::{Field, Scalar};

pub const SEMIGROUP_CAP: u128 = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonAdditiveAutomorphism {
    /// The map is `x ↦ x^exponent`.
    pub exponent: u64,
    pub a: Scalar,
    pub b: Scalar,
    /// `α(a + b)`.
    pub image_of_sum: Scalar,
    /// `α(a) + α(b)`.
    pub sum_of_images: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupReport {
    pub q: u64,
    /// Multiplicative bijections found by brute force.
    pub brute_count: u64,
    pub phi_q_minus_1: u64,
    /// Those among them that are also additive.
    pub field_aut_count: u64,
    pub nonadditive_example: Option<NonAdditiveAutomorphism>,
}

pub fn euler_phi(mut m: u64) -> u64 {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn semigroup_aut_report(p: u64, n: usize) -> Result<SemigroupReport, FiniteError> {
    let field = Field::extension(p, n)?;
    let q = field.order().expect("finite field");
    if q > SEMIGROUP_CAP {
        return Err(FiniteError::CapExceeded { order: q, cap: SEMIGROUP_CAP });
    }
    let q = q as usize;
    let elems: Vec<Scalar> = (0..q as u64).map(|i| field.element(i).expect("index below order")).collect();
    let idx = |s: &Scalar| field.index_of(s).expect("field element") as usize;
    let mut mul = vec![0usize; q * q];
    let mut add = vec![0usize; q * q];
    for a in 0..q {
        for b in 0..q {
            mul[a * q + b] = idx(&field.mul(&elems[a], &elems[b]));
            add[a * q + b] = idx(&field.add(&elems[a], &elems[b]));
        }
    }
    let one = idx(&field.one());
    let powers_of = |g: usize| -> Vec<usize> {
        let mut out = Vec::with_capacity(q - 1);
        let mut x = one;
        for _ in 0..q - 1 {
            out.push(x);
            x = mul[x * q + g];
        }
        out
    };
    let generator = (1..q)
        .find(|&g| {
            let pw = powers_of(g);
            let mut seen = vec![false; q];
            pw.iter().all(|&x| !core::mem::replace(&mut seen[x], true))
        })
        .expect("multiplicative group is cyclic");
    let gpow = powers_of(generator);

    let mut brute_count = 0;
    let mut field_aut_count = 0;
    let mut additive_by_exponent = vec![None; q];
    for (k, &h) in gpow.iter().enumerate() {
        let hpow = powers_of(h);
        let mut alpha = vec![0usize; q];
        for (e, &x) in gpow.iter().enumerate() {
            alpha[x] = hpow[e];
        }
        let mut seen = vec![false; q];
        if !alpha.iter().all(|&y| !core::mem::replace(&mut seen[y], true)) {
            continue;
        }
        let multiplicative = (0..q).all(|a| (0..q).all(|b| alpha[mul[a * q + b]] == mul[alpha[a] * q + alpha[b]]));
        if !multiplicative || alpha[one] != one {
            continue;
        }
        brute_count += 1;
        let failure =
            (0..q).flat_map(|a| (0..q).map(move |b| (a, b))).find(|&(a, b)| alpha[add[a * q + b]] != add[alpha[a] * q + alpha[b]]);
        if failure.is_none() {
            field_aut_count += 1;
        }
        // α(g) = g^k, so α is x ↦ x^k.
        additive_by_exponent[k] = Some((failure, alpha));
    }
    let nonadditive_example = (1..q as u64 - 1).filter(|&k| gcd(k, q as u64 - 1) == 1).find_map(|k| {
        let (failure, alpha) = additive_by_exponent[k as usize].as_ref()?;
        let (a, b) = (*failure)?;
        Some(NonAdditiveAutomorphism {
            exponent: k,
            a: elems[a].clone(),
            b: elems[b].clone(),
            image_of_sum: elems[alpha[add[a * q + b]]].clone(),
            sum_of_images: elems[add[alpha[a] * q + alpha[b]]].clone(),
        })
    });
    Ok(SemigroupReport { q: q as u64, brute_count, phi_q_minus_1: euler_phi(q as u64 - 1), field_aut_count, nonadditive_example })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn q5() {
        let r = semigroup_aut_report(5, 1).unwrap();
        assert_eq!((r.brute_count, r.phi_q_minus_1, r.field_aut_count), (2, 2, 1));
        let e = r.nonadditive_example.unwrap();
        assert_eq!(e.exponent, 3);
        assert_eq!((e.a.to_string(), e.b.to_string()), ("1".into(), "1".into()));
        assert_eq!((e.image_of_sum.to_string(), e.sum_of_images.to_string()), ("3".into(), "2".into()));
    }

    #[test]
    fn q4_and_q8() {
        let r = semigroup_aut_report(2, 2).unwrap();
        assert_eq!((r.brute_count, r.phi_q_minus_1, r.field_aut_count), (2, 2, 2));
        assert!(r.nonadditive_example.is_none());
        let r = semigroup_aut_report(2, 3).unwrap();
        assert_eq!((r.brute_count, r.phi_q_minus_1, r.field_aut_count), (6, 6, 3));
        assert!(r.nonadditive_example.is_some());
    }

    #[test]
    fn phi_values() {
        assert_eq!([1, 2, 3, 4, 6, 7, 8, 12].map(euler_phi), [1, 1, 2, 2, 2, 6, 4, 4]);
        assert!(matches!(semigroup_aut_report(2, 10), Err(FiniteError::CapExceeded { .. })));
    }
}
