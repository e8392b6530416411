//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! (written straight to stdout so it shows up without `--nocapture`).

use std::fmt::Write as _;
use std::io::Write as _;
use std::time::{Duration, Instant};

use ualie_core::analysis::{
    c_condition, lemma_10_1_injection, seaweed_verdict, verdict, verify_example_5_7_refutation, AnalysisConfig, AnalysisError,
    CConditionOutcome, NegativeCase, Rule, Verdict,
};
use ualie_core::constructions::{
    abelian, build_seaweed, example_4_6, example_5_7, gl, heisenberg, included_roots, s2, sl, upper_triangular, Composition, SeaweedSpec,
};
use ualie_core::finite::{
    commutator_bijections, is_wua, negative_bijection_finite, semigroup_aut_report, ua_against, FiniteLieRing, FROM_ALGEBRA_CAP,
};
use ualie_core::linalg::{add_vec, is_zero_vec};
use ualie_core::rng::XorShift64Star;
use ualie_core::{Field, Scalar, StructureConstantAlgebra};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q() -> Field {
    Field::rationals()
}

/// Exact `dim C(a) ∩ C(b)` by intersecting the two centralizers.
fn mutual_dim(g: &StructureConstantAlgebra, a: &[Scalar], b: &[Scalar]) -> usize {
    g.centralizer(a).unwrap().intersect(&g.centralizer(b).unwrap()).unwrap().dim()
}

fn criterion_1() -> Check {
    let cfg = AnalysisConfig::default();
    let mut log = String::new();
    let mut expect = |g: StructureConstantAlgebra, want: Verdict, rule: Option<Rule>| -> Result<(), String> {
        let v = verdict(&g, &cfg).map_err(|e| format!("{}: {e}", g.name()))?;
        writeln!(log, "{} {} {} {:?}", g.name(), v.verdict, v.rule, v.witness).unwrap();
        ensure(v.verdict == want, || format!("{}: verdict {} (want {want})", g.name(), v.verdict))?;
        if let Some(r) = rule {
            ensure(v.rule == r, || format!("{}: rule {} (want {r})", g.name(), v.rule))?;
        }
        if v.rule == Rule::CCondition {
            let (a, b) = v.witness.as_ref().ok_or("missing witness")?;
            ensure(mutual_dim(&g, a, b) == 0, || format!("{}: witness not certified", g.name()))?;
        }
        if let Some(d) = &v.bijection {
            ensure(d.verified(), || format!("{}: bijection obligations fail", g.name()))?;
        }
        Ok(())
    };
    expect(sl(&q(), 2).unwrap(), Verdict::Ua, Some(Rule::CCondition))?;
    expect(s2(&q()), Verdict::Ua, Some(Rule::CCondition))?;
    expect(gl(&q(), 2).unwrap(), Verdict::NotUa, Some(Rule::NegCase2))?;
    expect(gl(&q(), 3).unwrap(), Verdict::NotUa, Some(Rule::NegCase2))?;
    for k in 1..=3 {
        expect(heisenberg(&q(), k), Verdict::NotUa, None)?;
    }
    for n in 3..=5 {
        expect(upper_triangular(&q(), n, false).unwrap(), Verdict::NotUa, None)?;
    }
    expect(example_4_6(&q()).unwrap(), Verdict::Unknown, Some(Rule::None))?;
    expect(example_5_7(&q()).unwrap(), Verdict::Unknown, Some(Rule::None))?;
    Ok(log)
}

fn criterion_2() -> Check {
    let g = example_5_7(&q()).unwrap();
    ensure(g.center().dim() == 0, || "center is not trivial".into())?;
    let cfg = AnalysisConfig::default();
    let rep = verify_example_5_7_refutation(100, cfg.seed, cfg.bound).map_err(|e| e.to_string())?;
    ensure(rep.samples == 100, || format!("{} samples", rep.samples))?;
    ensure(rep.min_mutual_dim >= 1, || format!("mutual dimension {} seen", rep.min_mutual_dim))?;
    ensure(rep.d_checks_passed == 100, || format!("D checks passed on {} of 100", rep.d_checks_passed))?;
    ensure(rep.passed(), || format!("failures at {:?}", rep.failures))?;
    let c = c_condition(&g, &cfg).map_err(|e| e.to_string())?;
    ensure(c.outcome == CConditionOutcome::ProbablyFails, || format!("C-condition {}", c.outcome))?;
    Ok(format!("{rep:?} {:?}", c.failure_bound))
}

fn seaweed_predicates(ns: &[usize]) -> Check {
    let cfg = AnalysisConfig::default();
    let mut log = String::new();
    let mut count = 0;
    for &n in ns {
        for top in Composition::all(n) {
            for bottom in Composition::all(n) {
                let spec = SeaweedSpec::new(n, top.clone(), bottom.clone(), q()).unwrap();
                let g = build_seaweed(&spec).unwrap();
                let (_, ample) = seaweed_verdict(&spec, &cfg).map_err(|e| e.to_string())?;
                let roots = included_roots(&spec);
                let ample_rank = ample.span_dim == n - 1;
                let connected = ample.components == 1;
                let trivial_center = g.center().is_zero();
                let holds = c_condition(&g, &cfg).map_err(|e| e.to_string())?.outcome == CConditionOutcome::Holds;
                writeln!(log, "{n} {top}|{bottom} roots={} {ample_rank} {connected} {trivial_center} {holds}", roots.len()).unwrap();
                ensure(ample_rank == connected && connected == trivial_center && trivial_center == holds, || {
                    format!("n={n} {top}|{bottom}: rank {ample_rank}, connected {connected}, center {trivial_center}, C {holds}")
                })?;
                count += 1;
            }
        }
    }
    writeln!(log, "{count} seaweeds").unwrap();
    Ok(log)
}

fn criterion_3() -> Check {
    seaweed_predicates(&[2, 3, 4, 5])
}

fn criterion_4() -> Check {
    let cfg = AnalysisConfig::default();
    let mut log = String::new();
    for n in 1..=5 {
        for top in Composition::all(n) {
            let spec = SeaweedSpec::new(n, top.clone(), Composition::whole(n), q()).unwrap();
            let (v, ample) = seaweed_verdict(&spec, &cfg).map_err(|e| e.to_string())?;
            writeln!(log, "{n} {top} {} {} {:?}", v.verdict, v.rule, v.witness).unwrap();
            ensure(ample.ample, || format!("n={n} top={top} not ample"))?;
            ensure(v.verdict == Verdict::Ua, || format!("n={n} top={top}: {}", v.verdict))?;
            if n == 1 {
                // sl_1 is the zero algebra.
                ensure(v.rule == Rule::TrivialDim0, || format!("n=1: rule {}", v.rule))?;
                continue;
            }
            let g = build_seaweed(&spec).unwrap();
            let (a, b) = v.witness.as_ref().ok_or_else(|| format!("n={n} top={top}: no witness"))?;
            ensure(mutual_dim(&g, a, b) == 0, || format!("n={n} top={top}: witness not certified"))?;
        }
    }
    Ok(log)
}

/// Independent `N × N` scan of a permutation against the ring tables.
fn scan(r: &FiniteLieRing, table: &[u32]) -> (bool, Option<(usize, usize)>) {
    let n = r.order();
    let im = |x: usize| table[x] as usize;
    let mut preserved = true;
    let mut witness = None;
    for a in 0..n {
        for b in 0..n {
            preserved &= im(r.bracket(a, b)) == r.bracket(im(a), im(b));
            if witness.is_none() && im(r.add(a, b)) != r.add(im(a), im(b)) {
                witness = Some((a, b));
            }
        }
    }
    (preserved, witness)
}

fn criterion_5() -> Check {
    let mut log = String::new();
    for p in [2, 3] {
        let g = heisenberg(&Field::prime(p).unwrap(), 1);
        let r = FiniteLieRing::from_algebra(&g, FROM_ALGEBRA_CAP).map_err(|e| e.to_string())?;
        ensure(r.order() == (p * p * p) as usize, || format!("order {}", r.order()))?;
        let rep = negative_bijection_finite(&r).map_err(|e| e.to_string())?;
        ensure(rep.case == NegativeCase::CenterInDerived, || format!("F_{p}: case {:?}", rep.case))?;
        let (preserved, witness) = scan(&r, &rep.table);
        ensure(preserved, || format!("F_{p}: swap breaks a commutator"))?;
        ensure(witness.is_some(), || format!("F_{p}: swap is additive"))?;
        ensure(rep.verified(), || format!("F_{p}: report not verified"))?;
        let w = is_wua(&r).map_err(|e| e.to_string())?;
        ensure(!w.wua, || format!("F_{p}: is_wua returned true"))?;
        let c = w.counterexample.as_ref().ok_or("missing counterexample")?;
        let (cp, cw) = scan(&r, &c.table);
        ensure(cp && cw.is_some(), || format!("F_{p}: enumerated counterexample does not verify"))?;
        writeln!(log, "F_{p} N={} swap {}<->{} witness {witness:?} wua-counterexample {:?}", r.order(), rep.u, rep.v, c.pair).unwrap();
    }
    Ok(log)
}

fn klein() -> FiniteLieRing {
    let z2 = FiniteLieRing::cyclic_ring(2).unwrap();
    FiniteLieRing::direct_product(&z2, &z2).unwrap()
}

fn criterion_6() -> Check {
    let k = klein();
    let z4 = FiniteLieRing::cyclic_ring(4).unwrap();
    let w = is_wua(&k).map_err(|e| e.to_string())?;
    ensure(w.wua && w.checked == 6, || format!("is_wua(klein) = {} over {}", w.wua, w.checked))?;
    let all = commutator_bijections(&k, &k, 100).map_err(|e| e.to_string())?;
    ensure(all.samples.len() == 6, || format!("{} self-bijections", all.samples.len()))?;
    for t in &all.samples {
        ensure(scan(&k, t).1.is_none(), || format!("{t:?} is not additive"))?;
    }
    let against = ua_against(&k, &z4).map_err(|e| e.to_string())?;
    ensure(!against.all_additive, || "ua_against(klein, Z/4) reported all additive".into())?;
    ensure(against.bijections == 6 && against.non_additive == 6, || {
        format!("{} bijections, {} non-additive", against.bijections, against.non_additive)
    })?;
    let cross = commutator_bijections(&k, &z4, 100).map_err(|e| e.to_string())?;
    for t in &cross.samples {
        let im = |x: usize| t[x] as usize;
        let additive = (0..4).all(|a| (0..4).all(|b| im(k.add(a, b)) == z4.add(im(a), im(b))));
        ensure(!additive, || format!("{t:?} is additive"))?;
    }
    Ok(format!("{w:?} {against:?}"))
}

fn phi(m: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
}

fn criterion_7() -> Check {
    let mut log = String::new();
    for (p, n) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let r = semigroup_aut_report(p, n).map_err(|e| e.to_string())?;
        let q = r.q;
        ensure(r.brute_count == phi(q - 1), || format!("q={q}: {} automorphisms, phi = {}", r.brute_count, phi(q - 1)))?;
        ensure(r.nonadditive_example.is_some() == (q > 4), || format!("q={q}: non-additive example presence wrong"))?;
        if let Some(e) = &r.nonadditive_example {
            let f = Field::extension(p, n).unwrap();
            let alpha = |x: &Scalar| f.pow(x, e.exponent as u128);
            let lhs = alpha(&f.add(&e.a, &e.b));
            let rhs = f.add(&alpha(&e.a), &alpha(&e.b));
            ensure(lhs != rhs && lhs == e.image_of_sum && rhs == e.sum_of_images, || format!("q={q}: witness fails"))?;
            // x ↦ x^k is multiplicative and bijective.
            let elems: Vec<Scalar> = (0..q).map(|i| f.element(i).unwrap()).collect();
            let mut images: Vec<Scalar> = elems.iter().map(alpha).collect();
            images.sort();
            images.dedup();
            ensure(images.len() == q as usize, || format!("q={q}: x^{} is not bijective", e.exponent))?;
        }
        writeln!(log, "q={q} count={} phi={} aut={} ex={:?}", r.brute_count, r.phi_q_minus_1, r.field_aut_count, r.nonadditive_example)
            .unwrap();
    }
    Ok(log)
}

fn random_rational(rng: &mut XorShift64Star) -> Scalar {
    let f = q();
    f.div(&f.from_i64(rng.symmetric(20)), &f.from_i64(rng.below(5) as i64 + 1)).unwrap()
}

fn criterion_8() -> Check {
    let cfg = AnalysisConfig { samples: 1000, ..AnalysisConfig::default() };
    let mut log = String::new();
    let mut rng = XorShift64Star::new(0x10_01);
    for g in [s2(&q()), upper_triangular(&q(), 3, true).unwrap(), abelian(&q(), 2)] {
        let rep = lemma_10_1_injection(&g, &cfg).map_err(|e| format!("{}: {e}", g.name()))?;
        ensure(rep.samples_checked == 1000 && rep.commutators_preserved, || format!("{}: builder's own check failed", g.name()))?;
        ensure(rep.witness_verified, || format!("{}: witness not verified", g.name()))?;
        let f = g.field();
        let beta = |x: &[Scalar]| rep.map.apply(x);
        for _ in 0..1000 {
            let x: Vec<Scalar> = (0..g.dim()).map(|_| random_rational(&mut rng)).collect();
            let y: Vec<Scalar> = (0..g.dim()).map(|_| random_rational(&mut rng)).collect();
            let lhs = beta(&g.bracket(&x, &y).unwrap());
            let rhs = rep.s.bracket(&beta(&x), &beta(&y)).unwrap();
            ensure(lhs == rhs, || format!("{}: commutator not preserved", g.name()))?;
        }
        let (x, y) = &rep.additivity_witness;
        let sum = add_vec(f, x, y);
        ensure(beta(&sum) != add_vec(f, &beta(x), &beta(y)), || format!("{}: witness is additive", g.name()))?;
        ensure(!is_zero_vec(f, &beta(x)), || format!("{}: witness maps to zero", g.name()))?;
        writeln!(log, "{} -> {} witness {:?}", g.name(), rep.s.name(), rep.additivity_witness).unwrap();
    }
    match lemma_10_1_injection(&sl(&q(), 2).unwrap(), &cfg) {
        Err(AnalysisError::PerfectAlgebra) => {}
        other => return Err(format!("sl_2 not refused: {:?}", other.map(|r| r.samples_checked))),
    }
    Ok(log)
}

fn ring_corpus() -> Vec<(String, FiniteLieRing)> {
    let f2 = Field::prime(2).unwrap();
    let alg = |g| FiniteLieRing::from_algebra(&g, FROM_ALGEBRA_CAP).unwrap();
    let z2 = FiniteLieRing::cyclic_ring(2).unwrap();
    let s2f2 = alg(s2(&f2));
    let mut out: Vec<(String, FiniteLieRing)> = (1..=8).map(|m| (format!("Z/{m}"), FiniteLieRing::cyclic_ring(m).unwrap())).collect();
    out.push(("klein".into(), klein()));
    out.push(("Z/2xZ/4".into(), FiniteLieRing::direct_product(&z2, &FiniteLieRing::cyclic_ring(4).unwrap()).unwrap()));
    out.push(("abelian_3(F_2)".into(), alg(abelian(&f2, 3))));
    out.push(("heisenberg_3(F_2)".into(), alg(heisenberg(&f2, 1))));
    out.push(("sl_2(F_2)".into(), alg(sl(&f2, 2).unwrap())));
    out.push(("t_2(F_2)".into(), alg(upper_triangular(&f2, 2, true).unwrap())));
    out.push(("Z/2xs2(F_2)".into(), FiniteLieRing::direct_product(&z2, &s2f2).unwrap()));
    out.push(("s2(F_2)".into(), s2f2));
    out
}

fn naive_count(r: &FiniteLieRing, s: &FiniteLieRing) -> u64 {
    fn go(r: &FiniteLieRing, s: &FiniteLieRing, alpha: &mut Vec<u32>, used: &mut Vec<bool>, count: &mut u64) {
        let n = r.order();
        if alpha.len() == n {
            let im = |x: usize| alpha[x] as usize;
            if (0..n).all(|a| (0..n).all(|b| im(r.bracket(a, b)) == s.bracket(im(a), im(b)))) {
                *count += 1;
            }
            return;
        }
        for y in 1..n {
            if !used[y] {
                used[y] = true;
                alpha.push(y as u32);
                go(r, s, alpha, used, count);
                alpha.pop();
                used[y] = false;
            }
        }
    }
    let mut count = 0;
    let mut used = vec![false; r.order()];
    used[0] = true;
    go(r, s, &mut vec![0], &mut used, &mut count);
    count
}

fn criterion_9() -> Check {
    let rings = ring_corpus();
    let mut log = String::new();
    for (label, r) in &rings {
        ensure(r.validate().is_valid(), || format!("{label} fails the ring axioms"))?;
        let fast = commutator_bijections(r, r, 0).map_err(|e| e.to_string())?.count;
        let slow = naive_count(r, r);
        ensure(fast == slow, || format!("{label}: backtracking {fast}, naive {slow}"))?;
        writeln!(log, "{label} {fast}").unwrap();
    }
    for (la, a) in &rings {
        for (lb, b) in &rings {
            if la != lb && a.order() == b.order() && a.order() <= 8 {
                let fast = commutator_bijections(a, b, 0).map_err(|e| e.to_string())?.count;
                let slow = naive_count(a, b);
                ensure(fast == slow, || format!("{la} -> {lb}: backtracking {fast}, naive {slow}"))?;
            }
        }
    }
    Ok(log)
}

fn cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = ualie::run(std::iter::once("ualie").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

const CLI_RUNS: &[&[&str]] = &[
    &["analyze", "--builtin", "example_5_7"],
    &["analyze", "--builtin", "sl", "--n", "3", "--seed", "7"],
    &["seaweed", "--n", "5", "--top", "2,3", "--bottom", "1,4"],
    &["finite", "wua", "heisenberg", "--k", "1", "--field", "Fp:2"],
    &["counterexample", "injection", "--builtin", "s2"],
];

type Criterion = (u8, &'static str, fn() -> Check, Duration);

const CRITERIA: &[Criterion] = &[
    (1, "fixture verdicts", criterion_1, Duration::from_secs(5)),
    (2, "example_5_7 refutation", criterion_2, Duration::from_secs(5)),
    (3, "seaweed predicates agree", criterion_3, Duration::from_secs(60)),
    (4, "parabolic coverage", criterion_4, Duration::from_secs(60)),
    (5, "heisenberg_3 swap over F_2 and F_3", criterion_5, Duration::from_secs(30)),
    (6, "Klein four-group separation", criterion_6, Duration::from_secs(1)),
    (7, "semigroup automorphism counts", criterion_7, Duration::from_secs(10)),
    (8, "injection builder", criterion_8, Duration::from_secs(5)),
    (9, "backtracking vs naive enumeration", criterion_9, Duration::from_secs(60)),
];

#[test]
fn acceptance_criteria() {
    let mut lines = String::new();
    let mut failed = Vec::new();
    let mut transcripts = Vec::new();
    for &(id, name, check, limit) in CRITERIA {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let verdict = match &result {
            Ok(_) if elapsed <= limit => Ok(()),
            Ok(_) => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            Err(e) => Err(e.clone()),
        };
        match &verdict {
            Ok(()) => writeln!(lines, "PASS  criterion {id:>2}  {name}  ({elapsed:.2?})").unwrap(),
            Err(e) => {
                writeln!(lines, "FAIL  criterion {id:>2}  {name}  ({elapsed:.2?}): {e}").unwrap();
                failed.push(id);
            }
        }
        transcripts.push(result);
    }

    // Criterion 10: a second run reproduces every transcript and CLI report byte for byte.
    let start = Instant::now();
    let mut mismatch = Vec::new();
    for (&(id, _, check, _), first) in CRITERIA.iter().zip(&transcripts) {
        if &check() != first {
            mismatch.push(format!("criterion {id}"));
        }
    }
    for args in CLI_RUNS {
        let (c1, o1) = cli(args);
        let (c2, o2) = cli(args);
        if c1 != 0 || c1 != c2 || o1 != o2 || o1.is_empty() {
            mismatch.push(args.join(" "));
        }
    }
    let elapsed = start.elapsed();
    if mismatch.is_empty() {
        writeln!(lines, "PASS  criterion 10  deterministic reports  ({elapsed:.2?})").unwrap();
    } else {
        writeln!(lines, "FAIL  criterion 10  deterministic reports: {}", mismatch.join(", ")).unwrap();
        failed.push(10);
    }

    let mut stdout = std::io::stdout().lock();
    stdout.write_all(lines.as_bytes()).unwrap();
    stdout.flush().unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}\n{lines}");
}
