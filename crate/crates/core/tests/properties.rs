use num_bigint::BigInt;
use proptest::prelude::*;
use ualie_core::constructions::{abelian, example_4_6, example_5_7, gl, heisenberg, s2, sl, upper_triangular};
use ualie_core::linalg::is_zero_vec;
use ualie_core::rng::XorShift64Star;
use ualie_core::{Field, Matrix, Scalar, StructureConstantAlgebra, Subspace};

fn fields() -> Vec<Field> {
    vec![
        Field::rationals(),
        Field::prime(2).unwrap(),
        Field::prime(7).unwrap(),
        Field::extension(2, 3).unwrap(),
        Field::extension(3, 2).unwrap(),
    ]
}

/// An element of `field` from two raw integers.
fn element(field: &Field, num: i64, den: i64) -> Scalar {
    match field.order() {
        Some(q) => field.element(num.unsigned_abs() % q as u64).unwrap(),
        None => field.from_ratio(&BigInt::from(num), &BigInt::from(den.max(1))).unwrap(),
    }
}

fn matrix(field: &Field, rows: usize, cols: usize, raw: &[i64]) -> Matrix {
    let data = (0..rows * cols).map(|k| element(field, raw[k % raw.len()], 1)).collect();
    Matrix::new(field.clone(), rows, cols, data).unwrap()
}

fn subspace(field: &Field, dim: usize, raw: &[i64], count: usize) -> Subspace {
    let vectors = (0..count).map(|r| (0..dim).map(|c| element(field, raw[(r * dim + c) % raw.len()], 1)).collect()).collect();
    Subspace::span(field, dim, vectors).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(fi in 0usize..5, x in any::<(i64, i64, i64, i64, i64, i64)>()) {
        let f = &fields()[fi];
        let small = |v: i64| v % 1_000_003;
        let a = element(f, small(x.0), small(x.1).abs() + 1);
        let b = element(f, small(x.2), small(x.3).abs() + 1);
        let c = element(f, small(x.4), small(x.5).abs() + 1);
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.is_zero(&f.add(&a, &f.neg(&a))));
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        match f.inv(&a) {
            Some(inv) => prop_assert!(f.is_one(&f.mul(&a, &inv))),
            None => prop_assert!(f.is_zero(&a)),
        }
        prop_assert_eq!(a.canonical(), a.clone());
        prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rank_nullity(fi in 0usize..5, rows in 1usize..=8, cols in 1usize..=8, raw in prop::collection::vec(-4i64..=4, 64)) {
        let f = &fields()[fi];
        let m = matrix(f, rows, cols, &raw);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.dim(), cols);
        for v in kernel.basis_vectors() {
            prop_assert!(is_zero_vec(f, &m.mul_vec(&v).unwrap()));
        }
        let (r, rank) = m.rref();
        prop_assert_eq!(rank, m.rank());
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn intersection_laws(fi in 0usize..5, raw in prop::collection::vec(-3i64..=3, 60), k in (1usize..=4, 1usize..=4, 1usize..=4)) {
        let f = &fields()[fi];
        let u = subspace(f, 5, &raw, k.0);
        let v = subspace(f, 5, &raw[20..], k.1);
        let w = subspace(f, 5, &raw[40..], k.2);
        let uv = u.intersect(&v).unwrap();
        prop_assert_eq!(&uv, &v.intersect(&u).unwrap());
        prop_assert_eq!(uv.intersect(&w).unwrap(), u.intersect(&v.intersect(&w).unwrap()).unwrap());
        prop_assert!(uv.is_subspace_of(&u) && uv.is_subspace_of(&v));
        // dim(U + V) + dim(U ∩ V) = dim U + dim V
        prop_assert_eq!(u.sum(&v).unwrap().dim() + uv.dim(), u.dim() + v.dim());
    }
}

fn catalog() -> Vec<StructureConstantAlgebra> {
    let q = Field::rationals();
    let f5 = Field::prime(5).unwrap();
    vec![
        gl(&q, 2).unwrap(),
        sl(&q, 2).unwrap(),
        sl(&q, 3).unwrap(),
        upper_triangular(&q, 3, true).unwrap(),
        upper_triangular(&q, 4, false).unwrap(),
        heisenberg(&q, 2),
        abelian(&q, 3),
        s2(&q),
        example_4_6(&q).unwrap(),
        example_5_7(&q).unwrap(),
        sl(&f5, 2).unwrap(),
        heisenberg(&Field::extension(2, 2).unwrap(), 1),
    ]
}

fn random_vector(g: &StructureConstantAlgebra, rng: &mut XorShift64Star) -> Vec<Scalar> {
    (0..g.dim()).map(|_| element(g.field(), rng.symmetric(3), 1)).collect()
}

#[test]
fn lie_invariants_on_catalog() {
    let mut rng = XorShift64Star::new(0xC0FFEE);
    for g in catalog() {
        assert!(g.validate_structure().is_valid(), "{}", g.name());
        let center = g.center();
        let derived = g.derived_subalgebra();
        for _ in 0..200 {
            let (a, b) = (random_vector(&g, &mut rng), random_vector(&g, &mut rng));
            let ca = g.centralizer(&a).unwrap();
            let cb = g.centralizer(&b).unwrap();
            assert_eq!(ca.dim(), g.dim() - g.ad_matrix(&a).unwrap().rank(), "{}", g.name());
            assert!(center.is_subspace_of(&ca));
            assert!(derived.contains(&g.bracket(&a, &b).unwrap()));
            assert_eq!(g.mutual_centralizer_dim(&a, &b).unwrap(), ca.intersect(&cb).unwrap().dim(), "{}", g.name());
            // Antisymmetry of the bracket.
            let ab = g.bracket(&a, &b).unwrap();
            let ba = g.bracket(&b, &a).unwrap();
            assert!(is_zero_vec(g.field(), &ualie_core::linalg::add_vec(g.field(), &ab, &ba)));
        }
    }
}
