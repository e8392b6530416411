//! Builders for the algebras the analyses run on: classical matrix algebras,
//! Heisenberg and abelian algebras, direct sums, semidirect products, the
//! two named counterexample algebras and seaweed subalgebras of sl_n.
//!
//! Matrix algebras are realised concretely: basis matrices are commuted and
//! the results re-expressed in the basis, so every builder goes through the
//! same structure-constant extraction.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::lie::{LieError, StructureConstantAlgebra};
use crate::linalg::{CoordinateSystem, LinalgError, Matrix};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("algebras live over different fields")]
    FieldMismatch,
    #[error("action of basis element {index} is not a derivation")]
    NotADerivation { index: usize },
    #[error("action does not respect the bracket of basis elements {i} and {j}")]
    NotAHomomorphism { i: usize, j: usize },
    #[error("characteristic {p} must be 0 or exceed n = {n}")]
    BadCharacteristic { p: u64, n: usize },
    #[error("matrix span is not closed under commutators")]
    NotClosed,
    #[error("composition parts must be positive and sum to {n}")]
    BadComposition { n: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Catalog names accepted by [`build_catalog`].
pub const CATALOG_NAMES: &[&str] = &["gl", "sl", "t", "n", "heisenberg", "abelian", "s2", "example_4_6", "example_5_7"];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CatalogParams {
    /// Matrix size for gl, sl, t, n.
    pub n: Option<usize>,
    /// Heisenberg rank; dimension is 2k + 1.
    pub k: Option<usize>,
    /// Dimension of an abelian algebra.
    pub d: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Catalog {
    Gl(usize),
    Sl(usize),
    UpperTriangular(usize),
    StrictlyUpper(usize),
    Heisenberg(usize),
    Abelian(usize),
    S2,
    Example46,
    Example57,
}

impl Catalog {
    pub fn parse(name: &str, params: CatalogParams) -> Result<Catalog, ConstructionError> {
        let need = |v: Option<usize>, flag: &str, min: usize| -> Result<usize, ConstructionError> {
            let v = v.ok_or_else(|| ConstructionError::BadParams(format!("{name} needs --{flag}")))?;
            if v < min {
                return Err(ConstructionError::BadParams(format!("{name} needs --{flag} >= {min}")));
            }
            Ok(v)
        };
        Ok(match name {
            "gl" => Catalog::Gl(need(params.n, "n", 1)?),
            "sl" => Catalog::Sl(need(params.n, "n", 1)?),
            "t" => Catalog::UpperTriangular(need(params.n, "n", 1)?),
            "n" => Catalog::StrictlyUpper(need(params.n, "n", 1)?),
            "heisenberg" => Catalog::Heisenberg(need(params.k, "k", 1)?),
            "abelian" => Catalog::Abelian(need(params.d, "d", 0)?),
            "s2" => Catalog::S2,
            "example_4_6" => Catalog::Example46,
            "example_5_7" => Catalog::Example57,
            other => return Err(ConstructionError::UnknownCatalogName(other.to_string())),
        })
    }

    pub fn build(self, field: &Field) -> Result<StructureConstantAlgebra, ConstructionError> {
        match self {
            Catalog::Gl(n) => gl(field, n),
            Catalog::Sl(n) => sl(field, n),
            Catalog::UpperTriangular(n) => upper_triangular(field, n, true),
            Catalog::StrictlyUpper(n) => upper_triangular(field, n, false),
            Catalog::Heisenberg(k) => Ok(heisenberg(field, k)),
            Catalog::Abelian(d) => Ok(abelian(field, d)),
            Catalog::S2 => Ok(s2(field)),
            Catalog::Example46 => example_4_6(field),
            Catalog::Example57 => example_5_7(field),
        }
    }
}

impl fmt::Display for Catalog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Catalog::Gl(n) => write!(f, "gl_{n}"),
            Catalog::Sl(n) => write!(f, "sl_{n}"),
            Catalog::UpperTriangular(n) => write!(f, "t_{n}"),
            Catalog::StrictlyUpper(n) => write!(f, "n_{n}"),
            Catalog::Heisenberg(k) => write!(f, "heisenberg_{}", 2 * k + 1),
            Catalog::Abelian(d) => write!(f, "abelian_{d}"),
            Catalog::S2 => write!(f, "s2"),
            Catalog::Example46 => write!(f, "example_4_6"),
            Catalog::Example57 => write!(f, "example_5_7"),
        }
    }
}

pub fn build_catalog(name: &str, params: CatalogParams, field: &Field) -> Result<StructureConstantAlgebra, ConstructionError> {
    Catalog::parse(name, params)?.build(field)
}

/// Matrix unit `E_ij` (0-based) of size `n`.
pub fn matrix_unit(field: &Field, n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(i, j, field.one());
    m
}

/// `E_ii - E_{i+1,i+1}` (0-based `i`).
fn diagonal_generator(field: &Field, n: usize, i: usize) -> Matrix {
    let mut m = Matrix::zeros(field, n, n);
    m.set(i, i, field.one());
    m.set(i + 1, i + 1, field.from_i64(-1));
    m
}

/// Structure constants of the span of `matrices` under the commutator.
pub fn from_matrix_basis(
    name: impl Into<String>,
    field: &Field,
    basis_names: Vec<String>,
    matrices: &[Matrix],
) -> Result<StructureConstantAlgebra, ConstructionError> {
    let flat: Vec<Vec<Scalar>> = matrices.iter().map(|m| m.entries().to_vec()).collect();
    let len = flat.first().map_or(0, Vec::len);
    let coords = CoordinateSystem::new(field, len, &flat)?;
    let mut failure = None;
    let algebra = StructureConstantAlgebra::from_bracket_fn(name, field.clone(), basis_names, |i, j| {
        let c = matrices[i].commutator(&matrices[j]).expect("square matrices of one size");
        coords.coordinates(c.entries()).unwrap_or_else(|| {
            failure = Some(ConstructionError::NotClosed);
            vec![field.zero(); matrices.len()]
        })
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(algebra),
    }
}

fn unit_name(i: usize, j: usize) -> String {
    format!("E{}{}", i + 1, j + 1)
}

pub fn gl(field: &Field, n: usize) -> Result<StructureConstantAlgebra, ConstructionError> {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(unit_name(i, j));
            mats.push(matrix_unit(field, n, i, j));
        }
    }
    from_matrix_basis(format!("gl_{n}"), field, names, &mats)
}

/// sl_n on the basis: positive root vectors (row-major), `H_1..H_{n-1}`,
/// negative root vectors (row-major). For n = 2 this is `(e, h, f)`.
pub fn sl(field: &Field, n: usize) -> Result<StructureConstantAlgebra, ConstructionError> {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            names.push(unit_name(i, j));
            mats.push(matrix_unit(field, n, i, j));
        }
    }
    for i in 0..n.saturating_sub(1) {
        names.push(format!("H{}", i + 1));
        mats.push(diagonal_generator(field, n, i));
    }
    for i in 0..n {
        for j in 0..i {
            names.push(unit_name(i, j));
            mats.push(matrix_unit(field, n, i, j));
        }
    }
    if n == 2 {
        names = vec!["e".into(), "h".into(), "f".into()];
    }
    if mats.is_empty() {
        return Ok(StructureConstantAlgebra::abelian_named(format!("sl_{n}"), field.clone(), Vec::new()));
    }
    from_matrix_basis(format!("sl_{n}"), field, names, &mats)
}

/// Upper triangular (`with_diagonal`) or strictly upper triangular n×n matrices.
pub fn upper_triangular(field: &Field, n: usize, with_diagonal: bool) -> Result<StructureConstantAlgebra, ConstructionError> {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        let start = if with_diagonal { i } else { i + 1 };
        for j in start..n {
            names.push(unit_name(i, j));
            mats.push(matrix_unit(field, n, i, j));
        }
    }
    let name = if with_diagonal { format!("t_{n}") } else { format!("n_{n}") };
    if mats.is_empty() {
        return Ok(StructureConstantAlgebra::abelian_named(name, field.clone(), Vec::new()));
    }
    from_matrix_basis(name, field, names, &mats)
}

/// Heisenberg algebra of dimension 2k + 1: `[x_i, y_i] = z`.
/// For k = 1 the basis is named `(x, y, z)`.
pub fn heisenberg(field: &Field, k: usize) -> StructureConstantAlgebra {
    let names: Vec<String> = if k == 1 {
        vec!["x".into(), "y".into(), "z".into()]
    } else {
        (1..=k).map(|i| format!("x{i}")).chain((1..=k).map(|i| format!("y{i}"))).chain(["z".to_string()]).collect()
    };
    let z = 2 * k;
    let entries = (0..k).map(|i| ((i, k + i), vec![(z, field.one())]));
    StructureConstantAlgebra::new(format!("heisenberg_{}", 2 * k + 1), field.clone(), names, 2 * k + 1, entries).expect("valid table")
}

pub fn abelian(field: &Field, d: usize) -> StructureConstantAlgebra {
    let names = (1..=d).map(|i| format!("a{i}")).collect();
    StructureConstantAlgebra::abelian_named(format!("abelian_{d}"), field.clone(), names)
}

/// The non-abelian 2-dimensional algebra `[h, e] = e`.
pub fn s2(field: &Field) -> StructureConstantAlgebra {
    StructureConstantAlgebra::new("s2", field.clone(), vec!["h".into(), "e".into()], 2, vec![((0, 1), vec![(1, field.one())])])
        .expect("valid table")
}

/// sl_2 ⋉ heisenberg_3 with sl_2 acting on `<x, y>` as on column vectors
/// (`[e,y]=x, [f,x]=y, [h,x]=x, [h,y]=-y`) and trivially on `z`.
pub fn example_4_6(field: &Field) -> Result<StructureConstantAlgebra, ConstructionError> {
    let l = sl(field, 2)?;
    let n = heisenberg(field, 1);
    let mut e = Matrix::zeros(field, 3, 3);
    e.set(0, 1, field.one());
    let mut h = Matrix::zeros(field, 3, 3);
    h.set(0, 0, field.one());
    h.set(1, 1, field.from_i64(-1));
    let mut f = Matrix::zeros(field, 3, 3);
    f.set(1, 0, field.one());
    Ok(semidirect(&l, &n, &[e, h, f])?.with_name("example_4_6"))
}

/// The 9-dimensional matrix algebra with trivial center that fails the
/// C-condition. Coordinates `(a, a13, a14, a15, a23, a24, a25, a35, a45)`
/// of the 5×5 matrix `a·diag(1,1,1,1,0) + Σ a_ij E_ij`.
pub fn example_5_7(field: &Field) -> Result<StructureConstantAlgebra, ConstructionError> {
    let mut d = Matrix::zeros(field, 5, 5);
    for i in 0..4 {
        d.set(i, i, field.one());
    }
    let mut names = vec!["a".to_string()];
    let mut mats = vec![d];
    for (i, j) in EXAMPLE_5_7_UNITS {
        names.push(format!("a{i}{j}"));
        mats.push(matrix_unit(field, 5, i - 1, j - 1));
    }
    from_matrix_basis("example_5_7", field, names, &mats)
}

/// Off-diagonal positions (1-based) of the example_5_7 coordinates, in basis order.
pub const EXAMPLE_5_7_UNITS: [(usize, usize); 8] = [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)];

pub fn direct_sum(g1: &StructureConstantAlgebra, g2: &StructureConstantAlgebra) -> Result<StructureConstantAlgebra, ConstructionError> {
    if g1.field() != g2.field() {
        return Err(ConstructionError::FieldMismatch);
    }
    let shift = g1.dim();
    let names = g1.basis_names().iter().chain(g2.basis_names()).cloned().collect();
    let mut entries: Vec<_> = g1.structure_constants().iter().map(|(&k, v)| (k, v.clone())).collect();
    for (&(i, j), v) in g2.structure_constants() {
        entries.push(((i + shift, j + shift), v.iter().map(|(k, c)| (k + shift, c.clone())).collect()));
    }
    Ok(StructureConstantAlgebra::new(format!("{}+{}", g1.name(), g2.name()), g1.field().clone(), names, shift + g2.dim(), entries)?)
}

/// Whether the endomorphism `d` (columns are images of basis vectors) is a
/// derivation of `n`.
pub fn is_derivation(n: &StructureConstantAlgebra, d: &Matrix) -> bool {
    let dim = n.dim();
    if d.rows() != dim || d.cols() != dim || d.field() != n.field() {
        return false;
    }
    let column = |a: usize| -> Vec<Scalar> { (0..dim).map(|r| d.get(r, a).clone()).collect() };
    let f = n.field();
    for a in 0..dim {
        for b in a + 1..dim {
            let ab = n.bracket_unchecked(&n.basis_vector(a), &n.basis_vector(b));
            let lhs = d.mul_vec(&ab).expect("square");
            let r1 = n.bracket_unchecked(&column(a), &n.basis_vector(b));
            let r2 = n.bracket_unchecked(&n.basis_vector(a), &column(b));
            let rhs: Vec<Scalar> = r1.iter().zip(&r2).map(|(x, y)| f.add(x, y)).collect();
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `l ⋉ n` where basis element `l_i` acts on `n` by `action[i]`.
pub fn semidirect(
    l: &StructureConstantAlgebra,
    n: &StructureConstantAlgebra,
    action: &[Matrix],
) -> Result<StructureConstantAlgebra, ConstructionError> {
    if l.field() != n.field() {
        return Err(ConstructionError::FieldMismatch);
    }
    if action.len() != l.dim() {
        return Err(ConstructionError::BadParams(format!("need {} action matrices, got {}", l.dim(), action.len())));
    }
    let f = l.field();
    for (index, d) in action.iter().enumerate() {
        if !is_derivation(n, d) {
            return Err(ConstructionError::NotADerivation { index });
        }
    }
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let mut image = Matrix::zeros(f, n.dim(), n.dim());
            for (k, c) in l.basis_bracket(i, j) {
                image = image.add(&action[*k].scale(c))?;
            }
            if image != action[i].commutator(&action[j])? {
                return Err(ConstructionError::NotAHomomorphism { i, j });
            }
        }
    }
    let shift = l.dim();
    let names = l.basis_names().iter().chain(n.basis_names()).cloned().collect();
    let mut entries: Vec<_> = l.structure_constants().iter().map(|(&k, v)| (k, v.clone())).collect();
    for (&(a, b), v) in n.structure_constants() {
        entries.push(((a + shift, b + shift), v.iter().map(|(k, c)| (k + shift, c.clone())).collect()));
    }
    for (i, d) in action.iter().enumerate() {
        for a in 0..n.dim() {
            let image: Vec<(usize, Scalar)> =
                (0..n.dim()).filter(|&r| !f.is_zero(d.get(r, a))).map(|r| (r + shift, d.get(r, a).clone())).collect();
            if !image.is_empty() {
                entries.push(((i, a + shift), image));
            }
        }
    }
    Ok(StructureConstantAlgebra::new(format!("{}⋉{}", l.name(), n.name()), f.clone(), names, shift + n.dim(), entries)?)
}

/// Ordered positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition, ConstructionError> {
        let n = parts.iter().sum();
        if parts.is_empty() || parts.contains(&0) {
            return Err(ConstructionError::BadComposition { n });
        }
        Ok(Composition(parts))
    }

    /// Parses `"2,3"`.
    pub fn parse(s: &str) -> Result<Composition, ConstructionError> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| ConstructionError::BadParams(format!("bad composition {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Composition::new(parts)
    }

    /// The single-part composition `(n)`.
    pub fn whole(n: usize) -> Composition {
        Composition(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Block index of each position 1..=n (returned 0-based by position).
    fn block_of(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(b, &len)| core::iter::repeat_n(b, len)).collect()
    }

    /// All 2^{n-1} compositions of n, ordered by the binary code of their cut points.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return Vec::new();
        }
        (0u64..1 << (n - 1))
            .map(|mask| {
                let mut parts = Vec::new();
                let mut len = 1;
                for cut in 0..n - 1 {
                    if mask >> cut & 1 == 1 {
                        parts.push(len);
                        len = 1;
                    } else {
                        len += 1;
                    }
                }
                parts.push(len);
                Composition(parts)
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// A seaweed of sl_n: upper part from `top`, lower part from `bottom`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeaweedSpec {
    pub n: usize,
    pub top: Composition,
    pub bottom: Composition,
    pub field: Field,
}

impl SeaweedSpec {
    pub fn new(n: usize, top: Composition, bottom: Composition, field: Field) -> Result<SeaweedSpec, ConstructionError> {
        if top.total() != n || bottom.total() != n {
            return Err(ConstructionError::BadComposition { n });
        }
        Ok(SeaweedSpec { n, top, bottom, field })
    }
}

/// sl_n roots `e_i - e_j` as 1-based pairs `(i, j)`, `i != j`, in row-major order.
pub type RootSet = BTreeSet<(usize, usize)>;

/// Pairs `i < j` sharing a top block, and `i > j` sharing a bottom block.
pub fn included_roots(spec: &SeaweedSpec) -> RootSet {
    let top = spec.top.block_of();
    let bottom = spec.bottom.block_of();
    let mut roots = RootSet::new();
    for i in 0..spec.n {
        for j in 0..spec.n {
            if (i < j && top[i] == top[j]) || (i > j && bottom[i] == bottom[j]) {
                roots.insert((i + 1, j + 1));
            }
        }
    }
    roots
}

/// Seaweed as traceless staircase matrices: root vectors `E_ij` in row-major
/// order, then `H_1..H_{n-1}`.
pub fn build_seaweed(spec: &SeaweedSpec) -> Result<StructureConstantAlgebra, ConstructionError> {
    let field = &spec.field;
    let p = field.characteristic();
    if p != 0 && p <= spec.n as u64 {
        return Err(ConstructionError::BadCharacteristic { p, n: spec.n });
    }
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for (i, j) in included_roots(spec) {
        names.push(unit_name(i - 1, j - 1));
        mats.push(matrix_unit(field, spec.n, i - 1, j - 1));
    }
    for i in 0..spec.n - 1 {
        names.push(format!("H{}", i + 1));
        mats.push(diagonal_generator(field, spec.n, i));
    }
    let name = format!("seaweed_{}[{}|{}]", spec.n, spec.top, spec.bottom);
    if mats.is_empty() {
        return Ok(StructureConstantAlgebra::abelian_named(name, field.clone(), Vec::new()));
    }
    from_matrix_basis(name, field, names, &mats)
}
