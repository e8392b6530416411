use ualie_core::analysis::{check_ample, verdict, AnalysisConfig, Rule, Verdict};
use ualie_core::constructions::{
    abelian, build_catalog, build_seaweed, direct_sum, example_4_6, example_5_7, gl, heisenberg, included_roots, s2, semidirect, sl,
    upper_triangular, CatalogParams, Composition, SeaweedSpec, CATALOG_NAMES,
};
use ualie_core::rng::XorShift64Star;
use ualie_core::{Field, Matrix, Scalar, SeriesKind, StructureConstantAlgebra};

fn q() -> Field {
    Field::rationals()
}

#[test]
fn every_catalog_name_builds_and_validates() {
    let params = CatalogParams { n: Some(3), k: Some(2), d: Some(3) };
    for field in [q(), Field::prime(5).unwrap(), Field::extension(2, 2).unwrap()] {
        for name in CATALOG_NAMES {
            let g = build_catalog(name, params, &field).unwrap();
            assert!(g.validate_structure().is_valid(), "{name} over {field}");
        }
    }
}

#[test]
fn catalog_dimensions() {
    let dims: Vec<usize> = [
        gl(&q(), 3).unwrap(),
        sl(&q(), 3).unwrap(),
        upper_triangular(&q(), 3, true).unwrap(),
        upper_triangular(&q(), 3, false).unwrap(),
        heisenberg(&q(), 2),
        abelian(&q(), 4),
        s2(&q()),
        example_4_6(&q()).unwrap(),
        example_5_7(&q()).unwrap(),
    ]
    .iter()
    .map(StructureConstantAlgebra::dim)
    .collect();
    assert_eq!(dims, [9, 8, 6, 3, 5, 4, 2, 6, 9]);
}

#[test]
fn series_and_centers() {
    let h = heisenberg(&q(), 1);
    assert!(h.is_nilpotent());
    assert_eq!(h.series(SeriesKind::LowerCentral).dims(), [3, 1, 0]);
    let s = sl(&q(), 2).unwrap();
    assert!(!s.is_solvable());
    assert_eq!(s.series(SeriesKind::Derived).dims(), [3]);
    let t = upper_triangular(&q(), 3, true).unwrap();
    assert!(t.is_solvable() && !t.is_nilpotent());
    assert_eq!(gl(&q(), 3).unwrap().center().dim(), 1);
    assert_eq!(example_5_7(&q()).unwrap().center().dim(), 0);
    let e46 = example_4_6(&q()).unwrap();
    assert!(e46.derived_subalgebra().is_full());
    assert_eq!(e46.center().dim(), 1);
}

/// Bracket of two example_5_7 coordinate vectors by the closed formulas.
fn example_5_7_formula(f: &Field, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    // (a, a13, a14, a15, a23, a24, a25, a35, a45)
    let m = |x: &Scalar, y: &Scalar| f.mul(x, y);
    let sum = |terms: &[Scalar]| terms.iter().fold(f.zero(), |acc, t| f.add(&acc, t));
    let c15 = sum(&[
        m(&a[0], &b[3]),
        m(&a[1], &b[7]),
        m(&a[2], &b[8]),
        f.neg(&m(&a[3], &b[0])),
        f.neg(&m(&a[7], &b[1])),
        f.neg(&m(&a[8], &b[2])),
    ]);
    let c25 = sum(&[
        m(&a[0], &b[6]),
        m(&a[4], &b[7]),
        m(&a[5], &b[8]),
        f.neg(&m(&a[6], &b[0])),
        f.neg(&m(&a[7], &b[4])),
        f.neg(&m(&a[8], &b[5])),
    ]);
    let c35 = f.sub(&m(&a[0], &b[7]), &m(&a[7], &b[0]));
    let c45 = f.sub(&m(&a[0], &b[8]), &m(&a[8], &b[0]));
    let mut out = vec![f.zero(); 9];
    out[3] = c15;
    out[6] = c25;
    out[7] = c35;
    out[8] = c45;
    out
}

#[test]
fn example_5_7_matches_coefficient_formulas() {
    let g = example_5_7(&q()).unwrap();
    let f = g.field();
    let mut rng = XorShift64Star::new(57);
    let mut draw = || -> Vec<Scalar> {
        (0..9)
            .map(|_| {
                let num = rng.symmetric(50);
                let den = rng.below(9) as i64 + 1;
                f.div(&f.from_i64(num), &f.from_i64(den)).unwrap()
            })
            .collect()
    };
    for _ in 0..100 {
        let (a, b) = (draw(), draw());
        assert_eq!(g.bracket(&a, &b).unwrap(), example_5_7_formula(f, &a, &b));
    }
}

fn parabolic_dim(blocks: &[usize]) -> usize {
    let n: usize = blocks.iter().sum();
    let square: usize = blocks.iter().map(|b| b * b).sum();
    (n * n + square) / 2 - 1
}

#[test]
fn seaweed_dimensions() {
    for n in 1..=5 {
        for top in Composition::all(n) {
            for bottom in Composition::all(n) {
                let spec = SeaweedSpec::new(n, top.clone(), bottom.clone(), q()).unwrap();
                let g = build_seaweed(&spec).unwrap();
                assert_eq!(g.dim(), included_roots(&spec).len() + n - 1, "{top} | {bottom}");
                assert!(g.validate_structure().is_valid());
            }
            let spec = SeaweedSpec::new(n, top.clone(), Composition::whole(n), q()).unwrap();
            assert_eq!(build_seaweed(&spec).unwrap().dim(), parabolic_dim(top.parts()), "parabolic {top}");
        }
    }
    let whole = SeaweedSpec::new(3, Composition::whole(3), Composition::whole(3), q()).unwrap();
    assert_eq!(build_seaweed(&whole).unwrap().dim(), 8);
}

#[test]
fn seaweed_characteristic_guard() {
    let spec = SeaweedSpec::new(3, Composition::whole(3), Composition::whole(3), Field::prime(3).unwrap());
    assert!(spec.is_err() || build_seaweed(&spec.unwrap()).is_err());
    let spec = SeaweedSpec::new(3, Composition::whole(3), Composition::whole(3), Field::prime(5).unwrap()).unwrap();
    assert!(build_seaweed(&spec).is_ok());
}

#[test]
fn ample_matches_graph_connectivity() {
    for n in 1..=5 {
        for top in Composition::all(n) {
            for bottom in Composition::all(n) {
                let spec = SeaweedSpec::new(n, top.clone(), bottom, q()).unwrap();
                let report = check_ample(&included_roots(&spec), n);
                assert_eq!(report.ample, report.components == 1);
            }
        }
    }
}

#[test]
fn semidirect_with_zero_action_is_direct_sum() {
    let l = s2(&q());
    let n = heisenberg(&q(), 1);
    let zero = Matrix::zeros(&q(), 3, 3);
    let sd = semidirect(&l, &n, &[zero.clone(), zero]).unwrap();
    let ds = direct_sum(&l, &n).unwrap();
    assert_eq!(sd.structure_constants(), ds.structure_constants());
    assert_eq!(sd.dim(), 5);
}

#[test]
fn s2_as_semidirect_product() {
    // ⟨h⟩ acting on ⟨e⟩ by the identity.
    let l = abelian(&q(), 1);
    let n = abelian(&q(), 1);
    let g = semidirect(&l, &n, &[Matrix::identity(&q(), 1)]).unwrap();
    assert_eq!(g.structure_constants(), s2(&q()).structure_constants());
    let v = verdict(&g, &AnalysisConfig::default()).unwrap();
    assert_eq!((v.verdict, v.rule), (Verdict::Ua, Rule::CCondition));
}

#[test]
fn semidirect_rejects_non_derivations() {
    let l = abelian(&q(), 1);
    let n = heisenberg(&q(), 1);
    // Scaling x alone does not respect [x, y] = z.
    let mut d = Matrix::zeros(&q(), 3, 3);
    d.set(0, 0, q().one());
    assert!(semidirect(&l, &n, &[d]).is_err());
}
