//! JSON and plain-text renderings of analysis results.
//!
//! Objects keep insertion order, so the same report always serializes to the
//! same bytes.

use serde_json::{json, Map, Value};
use ualie_core::analysis::{AmpleReport, BijectionDescription, InjectionReport, VerdictReport};
use ualie_core::finite::{AgainstReport, Counterexample, FiniteLieRing, FiniteNegativeReport, SemigroupReport, WuaReport};
use ualie_core::lie::JacobiReport;
use ualie_core::{Scalar, StructureConstantAlgebra};

use crate::format::{scalar_json, vector_json, FieldJson};

fn pair_json(pair: &(Vec<Scalar>, Vec<Scalar>)) -> Value {
    json!({ "a": vector_json(&pair.0), "b": vector_json(&pair.1) })
}

pub fn bijection_json(g: &StructureConstantAlgebra, d: &BijectionDescription) -> Value {
    let (u, c) = &d.additivity_witness;
    json!({
        "kind": d.kind.to_string(),
        "case": d.case.number(),
        "u": vector_json(&d.u),
        "v": vector_json(&d.v),
        "u_display": g.describe(&d.u),
        "v_display": g.describe(&d.v),
        "additivity_witness": { "u": vector_json(u), "c": vector_json(c) },
        "obligations": d.obligations.iter().map(|o| json!({ "statement": o.statement, "holds": o.holds })).collect::<Vec<_>>(),
        "verified": d.verified(),
    })
}

pub fn counterexample_json(r: &FiniteLieRing, c: &Counterexample) -> Value {
    let (a, b) = c.pair;
    let image = |x: usize| c.table[x] as usize;
    json!({
        "table": c.table,
        "pair": [a, b],
        "image_of_sum": image(r.add(a, b)),
        "sum_of_images": r.add(image(a), image(b)),
    })
}

pub fn verdict_json(g: &StructureConstantAlgebra, v: &VerdictReport) -> Value {
    let mut evidence = Map::new();
    if let Some(d) = &v.bijection {
        evidence.insert("bijection".into(), bijection_json(g, d));
    }
    if let Some(c) = &v.finite_counterexample {
        let (a, b) = c.pair;
        evidence.insert(
            "finite_counterexample".into(),
            json!({ "labels": "base-q digits, coordinate 0 lowest", "table": c.table, "pair": [a, b] }),
        );
    }
    if let Some((a, b)) = &v.witness {
        evidence.insert("witness_display".into(), json!({ "a": g.describe(a), "b": g.describe(b) }));
    }
    json!({
        "algebra": v.algebra,
        "field": serde_json::to_value(FieldJson::from_spec(&v.field)).expect("field serializes"),
        "dim": v.dim,
        "center_dim": v.center_dim,
        "derived_codim": v.derived_codim,
        "verdict": v.verdict.to_string(),
        "rule": v.rule.to_string(),
        "witness": v.witness.as_ref().map_or(Value::Null, pair_json),
        "confidence": v.confidence.as_ref().map_or(Value::Null, |c| json!({
            "trials": c.trials,
            "B": c.bound,
            "bound": c.failure_bound.map_or(Value::Null, |b| Value::String(b.to_string())),
        })),
        "seed": v.seed,
        "open_problem_note": v.open_problem_note,
        "evidence": evidence,
        "note": v.note,
    })
}

pub fn ample_json(a: &AmpleReport) -> Value {
    json!({ "ample": a.ample, "span_dim": a.span_dim, "components": a.components })
}

pub fn jacobi_json(g: &StructureConstantAlgebra, r: &JacobiReport) -> Value {
    json!({
        "kind": "algebra",
        "name": g.name(),
        "dim": g.dim(),
        "valid": r.is_valid(),
        "failures": r.failures.iter().map(|f| json!({
            "triple": [f.triple.0, f.triple.1, f.triple.2],
            "defect": vector_json(&f.defect),
        })).collect::<Vec<_>>(),
    })
}

pub fn wua_json(label: &str, r: &FiniteLieRing, w: &WuaReport) -> Value {
    json!({
        "ring": label,
        "order": r.order(),
        "wua": w.wua,
        "checked": w.checked,
        "counterexample": w.counterexample.as_ref().map_or(Value::Null, |c| counterexample_json(r, c)),
    })
}

pub fn against_json(labels: (&str, &str), r: &FiniteLieRing, s: &FiniteLieRing, a: &AgainstReport) -> Value {
    let witness = a.witness.as_ref().map_or(Value::Null, |c| {
        let (x, y) = c.pair;
        let image = |t: usize| c.table[t] as usize;
        json!({
            "table": c.table,
            "pair": [x, y],
            "image_of_sum": image(r.add(x, y)),
            "sum_of_images": s.add(image(x), image(y)),
        })
    });
    json!({
        "source": labels.0,
        "target": labels.1,
        "order": r.order(),
        "bijections": a.bijections,
        "non_additive": a.non_additive,
        "all_additive": a.all_additive,
        "conclusion": if a.all_additive { "no counterexample among given targets" } else { "not UA (certified)" },
        "witness": witness,
    })
}

pub fn semigroup_json(p: u64, n: usize, r: &SemigroupReport) -> Value {
    json!({
        "p": p,
        "n": n,
        "q": r.q,
        "brute_count": r.brute_count,
        "phi_q_minus_1": r.phi_q_minus_1,
        "field_aut_count": r.field_aut_count,
        "nonadditive_example": r.nonadditive_example.as_ref().map_or(Value::Null, |e| json!({
            "exponent": e.exponent,
            "a": scalar_json(&e.a),
            "b": scalar_json(&e.b),
            "image_of_sum": scalar_json(&e.image_of_sum),
            "sum_of_images": scalar_json(&e.sum_of_images),
        })),
    })
}

pub fn finite_negative_json(label: &str, r: &FiniteNegativeReport) -> Value {
    json!({
        "ring": label,
        "applicable": true,
        "case": r.case.number(),
        "u": r.u,
        "v": r.v,
        "table": r.table,
        "commutators_preserved": r.commutators_preserved,
        "additivity_witness": r.additivity_witness.map_or(Value::Null, |(a, b)| json!([a, b])),
        "verified": r.verified(),
    })
}

pub fn injection_json(g: &StructureConstantAlgebra, r: &InjectionReport) -> Value {
    let (x, y) = &r.additivity_witness;
    let f = g.field();
    let sum: Vec<Scalar> = x.iter().zip(y).map(|(a, b)| f.add(a, b)).collect();
    let (bx, by) = (r.map.apply(x), r.map.apply(y));
    let sum_of_images: Vec<Scalar> = bx.iter().zip(&by).map(|(a, b)| f.add(a, b)).collect();
    json!({
        "algebra": g.name(),
        "applicable": true,
        "target": r.s.name(),
        "target_dim": r.s.dim(),
        "adapted_basis": r.map.adapted_basis.iter().map(|v| vector_json(v)).collect::<Vec<_>>(),
        "samples_checked": r.samples_checked,
        "commutators_preserved": r.commutators_preserved,
        "additivity_witness": {
            "x": vector_json(x),
            "y": vector_json(y),
            "image_of_sum": vector_json(&r.map.apply(&sum)),
            "sum_of_images": vector_json(&sum_of_images),
        },
        "witness_verified": r.witness_verified,
    })
}

/// `path: value` lines; arrays of plain values stay on one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && (!x.is_array() || is_flat(x))),
        Value::Object(_) => false,
        _ => true,
    }
}

fn walk(v: &Value, path: &str, out: &mut String) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                walk(x, &join(k), out);
            }
        }
        Value::Array(items) if !is_flat(v) => {
            for (i, x) in items.iter().enumerate() {
                walk(x, &join(&i.to_string()), out);
            }
        }
        Value::String(s) => out.push_str(&format!("{path}: {s}\n")),
        other => out.push_str(&format!("{path}: {other}\n")),
    }
}
