//! JSON forms of fields, algebras, matrices and finite rings.
//!
//! Scalars travel as strings (`"3/4"`, `"2"`, `"1,0,1"`); bracket
//! coefficients may also be given as JSON integers on input.

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};
use ualie_core::finite::{FiniteError, FiniteLieRing};
use ualie_core::lie::LieError;
use ualie_core::linalg::LinalgError;
use ualie_core::scalar::{Field, FieldSpec, Scalar, ScalarError};
use ualie_core::{Matrix, StructureConstantAlgebra};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Finite(#[from] FiniteError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldJson {
    Q,
    Fp {
        p: u64,
    },
    Fq {
        p: u64,
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        modulus: Option<Vec<u64>>,
    },
}

impl FieldJson {
    pub fn from_spec(spec: &FieldSpec) -> FieldJson {
        match spec {
            FieldSpec::Rationals => FieldJson::Q,
            FieldSpec::PrimeField { p } => FieldJson::Fp { p: *p },
            FieldSpec::ExtensionField { p, n, modulus } => FieldJson::Fq { p: *p, n: *n, modulus: Some(modulus.clone()) },
        }
    }

    pub fn to_field(&self) -> Result<Field, ScalarError> {
        match self {
            FieldJson::Q => Ok(Field::rationals()),
            FieldJson::Fp { p } => Field::prime(*p),
            FieldJson::Fq { p, n, modulus: None } => Field::extension(*p, *n),
            FieldJson::Fq { p, n, modulus: Some(m) } => Field::from_spec(FieldSpec::ExtensionField { p: *p, n: *n, modulus: m.clone() }),
        }
    }
}

pub fn field_to_json(field: &Field) -> Value {
    serde_json::to_value(FieldJson::from_spec(field.spec())).expect("field spec serializes")
}

/// Parses `Q`, `Fp:<p>` or `Fq:<p>,<n>`.
pub fn parse_field_flag(s: &str) -> Result<Field, String> {
    let bad = || format!("field must be Q, Fp:<p> or Fq:<p>,<n>, got {s:?}");
    if s == "Q" {
        return Ok(Field::rationals());
    }
    if let Some(p) = s.strip_prefix("Fp:") {
        let p = p.trim().parse().map_err(|_| bad())?;
        return Field::prime(p).map_err(|e| e.to_string());
    }
    if let Some(rest) = s.strip_prefix("Fq:") {
        let (p, n) = rest.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let n = n.trim().parse().map_err(|_| bad())?;
        return Field::extension(p, n).map_err(|e| e.to_string());
    }
    Err(bad())
}

pub fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn vector_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

fn parse_scalar_value(field: &Field, v: &Value) -> Result<Scalar, FormatError> {
    match v {
        Value::String(s) => Ok(field.parse(s)?),
        Value::Number(n) if n.is_i64() => Ok(field.from_i64(n.as_i64().expect("checked"))),
        other => Err(FormatError::Invalid(format!("expected a scalar string, got {other}"))),
    }
}

pub fn parse_vector(field: &Field, v: &Value) -> Result<Vec<Scalar>, FormatError> {
    let items = v.as_array().ok_or_else(|| FormatError::Invalid("expected an array of scalars".into()))?;
    items.iter().map(|x| parse_scalar_value(field, x)).collect()
}

#[derive(Debug, Deserialize)]
struct BracketJson {
    i: usize,
    j: usize,
    coeffs: Map<String, Value>,
}

#[derive(Debug, Deserialize)]
struct AlgebraJson {
    name: String,
    field: FieldJson,
    dim: usize,
    #[serde(default)]
    basis_names: Option<Vec<String>>,
    #[serde(default)]
    brackets: Vec<BracketJson>,
}

/// Loads an algebra; entries must have `i < j`. Jacobi is not checked here.
pub fn parse_algebra(text: &str) -> Result<StructureConstantAlgebra, FormatError> {
    let raw: AlgebraJson = serde_json::from_str(text)?;
    algebra_from_raw(raw)
}

pub fn algebra_from_value(v: Value) -> Result<StructureConstantAlgebra, FormatError> {
    algebra_from_raw(serde_json::from_value(v)?)
}

fn algebra_from_raw(raw: AlgebraJson) -> Result<StructureConstantAlgebra, FormatError> {
    let field = raw.field.to_field()?;
    let names = raw.basis_names.unwrap_or_else(|| (1..=raw.dim).map(|k| format!("e{k}")).collect());
    let mut entries = Vec::with_capacity(raw.brackets.len());
    for b in raw.brackets {
        if b.i >= b.j {
            return Err(LieError::IndexOrder { i: b.i, j: b.j }.into());
        }
        let mut coeffs = Vec::with_capacity(b.coeffs.len());
        for (k, v) in &b.coeffs {
            let k: usize = k.parse().map_err(|_| FormatError::Invalid(format!("coefficient key {k:?} is not an index")))?;
            coeffs.push((k, parse_scalar_value(&field, v)?));
        }
        entries.push(((b.i, b.j), coeffs));
    }
    Ok(StructureConstantAlgebra::new(raw.name, field, names, raw.dim, entries)?)
}

pub fn algebra_to_json(g: &StructureConstantAlgebra) -> Value {
    let brackets: Vec<Value> = g
        .structure_constants()
        .iter()
        .map(|(&(i, j), sparse)| {
            let coeffs: Map<String, Value> = sparse.iter().map(|(k, c)| (k.to_string(), scalar_json(c))).collect();
            json!({ "i": i, "j": j, "coeffs": coeffs })
        })
        .collect();
    json!({
        "name": g.name(),
        "field": field_to_json(g.field()),
        "dim": g.dim(),
        "basis_names": g.basis_names(),
        "brackets": brackets,
    })
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
}

pub fn matrix_from_json(field: &Field, v: &Value) -> Result<Matrix, FormatError> {
    let rows = v.as_array().ok_or_else(|| FormatError::Invalid("matrix must be an array of rows".into()))?;
    let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| parse_vector(field, r)).collect::<Result<_, _>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    Ok(Matrix::from_rows(field.clone(), cols, rows)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct RingJson {
    order: usize,
    add: Vec<Vec<usize>>,
    bracket: Vec<Vec<usize>>,
}

/// Loads a ring from its tables; run [`FiniteLieRing::validate`] afterwards.
pub fn parse_ring(text: &str) -> Result<FiniteLieRing, FormatError> {
    ring_from_value(serde_json::from_str(text)?)
}

pub fn ring_from_value(v: Value) -> Result<FiniteLieRing, FormatError> {
    let raw: RingJson = serde_json::from_value(v)?;
    let flatten = |name: &str, t: Vec<Vec<usize>>| -> Result<Vec<u32>, FormatError> {
        if t.len() != raw.order || t.iter().any(|r| r.len() != raw.order) {
            return Err(FormatError::Invalid(format!("{name} table must be {0}x{0}", raw.order)));
        }
        t.into_iter()
            .flatten()
            .map(|x| u32::try_from(x).map_err(|_| FormatError::Invalid(format!("{name} entry {x} is too large"))))
            .collect()
    };
    let add = flatten("add", raw.add)?;
    let bracket = flatten("bracket", raw.bracket)?;
    Ok(FiniteLieRing::new(raw.order, add, bracket)?)
}

pub fn ring_to_json(r: &FiniteLieRing) -> Value {
    json!({ "order": r.order(), "add": r.add_table(), "bracket": r.bracket_table() })
}

/// Whether a JSON document describes a finite ring rather than an algebra.
pub fn is_ring_document(v: &Value) -> bool {
    v.get("order").is_some() && v.get("add").is_some()
}
