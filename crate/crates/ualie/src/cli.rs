//! Command-line front end.
//!
//! Exit codes: 0 when a report was produced (including UNKNOWN verdicts),
//! 1 when the input fails to load or validate, 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use ualie_core::analysis::{
    lemma_10_1_injection, negative_criterion, seaweed_verdict, verdict, AnalysisConfig, AnalysisError, DEFAULT_BOUND, DEFAULT_SAMPLES,
    DEFAULT_SEED, DEFAULT_TRIALS,
};
use ualie_core::constructions::{build_catalog, CatalogParams, Composition, ConstructionError, SeaweedSpec};
use ualie_core::finite::{
    is_wua, negative_bijection_finite, semigroup_aut_report, ua_against, FiniteError, FiniteLieRing, FROM_ALGEBRA_CAP,
};
use ualie_core::{Field, StructureConstantAlgebra};

use crate::format::{algebra_from_value, is_ring_document, parse_field_flag, ring_from_value, FormatError};
use crate::report;

#[derive(Debug, Parser)]
#[command(name = "ualie", version, about = "Decide whether Lie algebras and finite Lie rings have unique addition")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Seed for every randomized step (decimal or 0x-prefixed hex).
    #[arg(long, global = true, value_parser = parse_seed, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random trials for the C-condition search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..), default_value_t = DEFAULT_TRIALS as u64)]
    trials: u64,
    /// Sampling bound: random coordinates lie in [-B, B].
    #[arg(long = "B", global = true, value_parser = clap::value_parser!(u64).range(1..), default_value_t = DEFAULT_BOUND)]
    bound: u64,
    /// Number of random pairs used by verification steps.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..), default_value_t = DEFAULT_SAMPLES as u64)]
    samples: u64,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit `key: value` lines.
    #[arg(long, global = true)]
    text: bool,
    /// Field for builtins and seaweeds: Q, Fp:<p> or Fq:<p>,<n>.
    #[arg(long, global = true, default_value = "Q")]
    field: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Jacobi identity of an algebra file, or the axioms of a ring file.
    Validate { file: PathBuf },
    /// Decide UA / NOT_UA / UNKNOWN for an algebra.
    Analyze(AlgebraInput),
    /// Analyze the seaweed subalgebra of sl_n given by two compositions of n.
    Seaweed {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        top: String,
        #[arg(long)]
        bottom: String,
    },
    /// Builtin algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Brute-force computations on finite Lie rings and fields.
    Finite {
        #[command(subcommand)]
        command: FiniteCommand,
    },
    /// Build an explicit non-additive map.
    Counterexample {
        kind: CounterexampleKind,
        #[command(flatten)]
        input: AlgebraInput,
    },
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// List builtins with the parameters used by `analyze --builtin`.
    List,
}

#[derive(Debug, Subcommand)]
enum FiniteCommand {
    /// Whether every commutator-preserving self-bijection is additive.
    Wua {
        /// Ring file, algebra file, `klein`, `z<N>` or a catalog name (with --field).
        input: String,
        #[command(flatten)]
        params: Params,
    },
    /// Enumerate commutator-preserving bijections from one ring onto another.
    Against {
        source: String,
        target: String,
        #[command(flatten)]
        params: Params,
    },
    /// Multiplicative bijections of F_q against its field automorphisms.
    Field {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CounterexampleKind {
    /// Swap bijection of the negative criterion.
    Negcrit,
    /// Commutator-preserving injection into g ⊕ F.
    Injection,
}

#[derive(Debug, Args)]
struct AlgebraInput {
    /// Algebra file (JSON).
    file: Option<PathBuf>,
    /// Catalog name instead of a file.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    #[command(flatten)]
    params: Params,
}

#[derive(Debug, Args, Clone, Copy)]
struct Params {
    /// Matrix size for gl, sl, t, n.
    #[arg(long)]
    n: Option<usize>,
    /// Heisenberg rank.
    #[arg(long)]
    k: Option<usize>,
    /// Abelian dimension.
    #[arg(long)]
    d: Option<usize>,
}

impl From<Params> for CatalogParams {
    fn from(p: Params) -> Self {
        CatalogParams { n: p.n, k: p.k, d: p.d }
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

/// A failed command: exit code and a diagnostic for standard error.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Construction(c) => c.into(),
            other => Failure::input(other.to_string()),
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::UnknownCatalogName(_) | ConstructionError::BadParams(_) | ConstructionError::BadComposition { .. } => {
                Failure::usage(e.to_string())
            }
            other => Failure::input(other.to_string()),
        }
    }
}

impl From<FiniteError> for Failure {
    fn from(e: FiniteError) -> Self {
        Failure::input(e.to_string())
    }
}

/// Report plus an optional exit code override (used by `validate`).
struct Outcome {
    report: Value,
    code: i32,
    diagnostic: Option<String>,
}

impl From<Value> for Outcome {
    fn from(report: Value) -> Self {
        Outcome { report, code: 0, diagnostic: None }
    }
}

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let informational = matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion);
            let target: &mut dyn Write = if informational { out } else { err };
            let _ = write!(target, "{}", e.render());
            return if informational { 0 } else { 2 };
        }
    };
    let text = cli.global.text;
    match dispatch(&cli) {
        Ok(outcome) => {
            let rendered = if text {
                report::render_text(&outcome.report)
            } else {
                let mut s = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
                s.push('\n');
                s
            };
            if out.write_all(rendered.as_bytes()).is_err() {
                return 1;
            }
            if let Some(d) = outcome.diagnostic {
                let _ = writeln!(err, "ualie: {d}");
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "ualie: {}", f.message);
            f.code
        }
    }
}

fn config(g: &GlobalArgs) -> AnalysisConfig {
    AnalysisConfig { seed: g.seed, trials: g.trials as usize, bound: g.bound, samples: g.samples as usize, ..AnalysisConfig::default() }
}

fn field(g: &GlobalArgs) -> Result<Field, Failure> {
    parse_field_flag(&g.field).map_err(Failure::usage)
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Analyze(input) => {
            let alg = load_algebra(input, g)?;
            Ok(report::verdict_json(&alg, &verdict(&alg, &config(g))?).into())
        }
        Command::Seaweed { n, top, bottom } => {
            let top = Composition::parse(top)?;
            let bottom = Composition::parse(bottom)?;
            let spec = SeaweedSpec::new(*n, top.clone(), bottom.clone(), field(g)?)?;
            let alg = ualie_core::constructions::build_seaweed(&spec)?;
            let (v, ample) = seaweed_verdict(&spec, &config(g))?;
            let mut rep = report::verdict_json(&alg, &v);
            rep.as_object_mut().expect("verdict is an object").insert(
                "seaweed".into(),
                json!({
                    "n": n,
                    "top": top.to_string(),
                    "bottom": bottom.to_string(),
                    "roots": ualie_core::constructions::included_roots(&spec).len(),
                    "ample": report::ample_json(&ample),
                }),
            );
            Ok(rep.into())
        }
        Command::Catalog { command: CatalogCommand::List } => Ok(catalog_list(&field(g)?)?.into()),
        Command::Finite { command } => finite(command, g),
        Command::Counterexample { kind, input } => counterexample(*kind, input, g),
    }
}

/// Builtin instances listed by `catalog list`.
pub const CATALOG_ENTRIES: &[(&str, CatalogParams)] = &[
    ("gl", CatalogParams { n: Some(2), k: None, d: None }),
    ("sl", CatalogParams { n: Some(2), k: None, d: None }),
    ("t", CatalogParams { n: Some(2), k: None, d: None }),
    ("n", CatalogParams { n: Some(3), k: None, d: None }),
    ("heisenberg", CatalogParams { n: None, k: Some(1), d: None }),
    ("abelian", CatalogParams { n: None, k: None, d: Some(2) }),
    ("s2", CatalogParams { n: None, k: None, d: None }),
    ("example_4_6", CatalogParams { n: None, k: None, d: None }),
    ("example_5_7", CatalogParams { n: None, k: None, d: None }),
];

fn catalog_list(field: &Field) -> Result<Value, Failure> {
    let mut entries = Vec::new();
    for (name, params) in CATALOG_ENTRIES {
        let mut p = serde_json::Map::new();
        let mut flags = String::new();
        for (flag, v) in [("n", params.n), ("k", params.k), ("d", params.d)] {
            if let Some(v) = v {
                p.insert(flag.into(), json!(v));
                flags.push_str(&format!(" --{flag} {v}"));
            }
        }
        let alg = build_catalog(name, *params, field)?;
        entries.push(json!({
            "name": name,
            "params": p,
            "algebra": alg.name(),
            "dim": alg.dim(),
            "command": format!("ualie analyze --builtin {name}{flags}"),
        }));
    }
    Ok(json!({ "builtins": entries }))
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: malformed JSON: {e}", path.display())))
}

fn validate(path: &Path) -> Result<Outcome, Failure> {
    let doc = read_json(path)?;
    if is_ring_document(&doc) {
        let r = ring_from_value(doc)?;
        let rep = r.validate();
        let diagnostic = rep.defects.first().map(|d| format!("ring axioms fail: {d}"));
        return Ok(Outcome {
            report: json!({ "kind": "ring", "order": r.order(), "valid": rep.is_valid(), "defects": rep.defects }),
            code: i32::from(!rep.is_valid()),
            diagnostic,
        });
    }
    let g = algebra_from_value(doc)?;
    let rep = g.validate_structure();
    let diagnostic = rep.failures.first().map(|f| {
        let (i, j, k) = f.triple;
        format!("Jacobi identity fails on basis triple ({i}, {j}, {k})")
    });
    Ok(Outcome { report: report::jacobi_json(&g, &rep), code: i32::from(!rep.is_valid()), diagnostic })
}

fn checked(g: StructureConstantAlgebra) -> Result<StructureConstantAlgebra, Failure> {
    match g.validate_structure().failures.first() {
        None => Ok(g),
        Some(f) => {
            let (i, j, k) = f.triple;
            Err(Failure::input(format!("{}: Jacobi identity fails on basis triple ({i}, {j}, {k})", g.name())))
        }
    }
}

fn load_algebra(input: &AlgebraInput, g: &GlobalArgs) -> Result<StructureConstantAlgebra, Failure> {
    match (&input.file, &input.builtin) {
        (Some(path), None) => checked(algebra_from_value(read_json(path)?)?),
        (None, Some(name)) => Ok(build_catalog(name, input.params.into(), &field(g)?)?),
        _ => Err(Failure::usage("give either an algebra file or --builtin NAME")),
    }
}

/// A ring named on the command line, with the label used in reports.
fn load_ring(spec: &str, params: Params, g: &GlobalArgs) -> Result<(String, FiniteLieRing), Failure> {
    let path = Path::new(spec);
    if path.exists() {
        let doc = read_json(path)?;
        let ring = if is_ring_document(&doc) {
            let r = ring_from_value(doc)?;
            if let Some(d) = r.validate().defects.first() {
                return Err(Failure::input(format!("{spec}: ring axioms fail: {d}")));
            }
            r
        } else {
            FiniteLieRing::from_algebra(&checked(algebra_from_value(doc)?)?, FROM_ALGEBRA_CAP)?
        };
        return Ok((spec.to_string(), ring));
    }
    if spec == "klein" {
        let k = FiniteLieRing::cyclic_ring(2)?;
        return Ok(("klein".into(), FiniteLieRing::direct_product(&k, &k)?));
    }
    if let Some(m) = spec.strip_prefix('z').and_then(|m| m.parse::<usize>().ok()) {
        if m == 0 {
            return Err(Failure::usage("z<N> needs N >= 1"));
        }
        return Ok((format!("Z/{m}"), FiniteLieRing::cyclic_ring(m)?));
    }
    let field = field(g)?;
    if !field.is_finite() {
        return Err(Failure::usage(format!("{spec}: builtin rings need a finite --field")));
    }
    let alg = build_catalog(spec, params.into(), &field)?;
    let label = format!("{}({field})", alg.name());
    Ok((label, FiniteLieRing::from_algebra(&alg, FROM_ALGEBRA_CAP)?))
}

fn finite(command: &FiniteCommand, g: &GlobalArgs) -> Result<Outcome, Failure> {
    match command {
        FiniteCommand::Wua { input, params } => {
            let (label, r) = load_ring(input, *params, g)?;
            Ok(report::wua_json(&label, &r, &is_wua(&r)?).into())
        }
        FiniteCommand::Against { source, target, params } => {
            let (la, a) = load_ring(source, *params, g)?;
            let (lb, b) = load_ring(target, *params, g)?;
            Ok(report::against_json((&la, &lb), &a, &b, &ua_against(&a, &b)?).into())
        }
        FiniteCommand::Field { p, n } => Ok(report::semigroup_json(*p, *n, &semigroup_aut_report(*p, *n)?).into()),
    }
}

fn not_applicable(subject: &str, reason: &str) -> Value {
    json!({ "subject": subject, "applicable": false, "reason": reason })
}

fn counterexample(kind: CounterexampleKind, input: &AlgebraInput, g: &GlobalArgs) -> Result<Outcome, Failure> {
    // Ring files only make sense for the finite swap construction.
    if let (CounterexampleKind::Negcrit, Some(path)) = (kind, &input.file) {
        let doc = read_json(path)?;
        if is_ring_document(&doc) {
            let label = path.display().to_string();
            let (_, r) = load_ring(&label, input.params, g)?;
            return Ok(match negative_bijection_finite(&r) {
                Ok(rep) => report::finite_negative_json(&label, &rep),
                Err(FiniteError::HypothesesNotMet(why)) => not_applicable(&label, &why),
                Err(e) => return Err(e.into()),
            }
            .into());
        }
    }
    let alg = load_algebra(input, g)?;
    match kind {
        CounterexampleKind::Negcrit => Ok(match negative_criterion(&alg) {
            Some(d) => {
                let mut v = report::bijection_json(&alg, &d);
                let m = v.as_object_mut().expect("bijection is an object");
                m.insert("algebra".into(), json!(alg.name()));
                m.insert("applicable".into(), json!(true));
                v
            }
            None => not_applicable(alg.name(), "trivial center or too few elements for the swap construction"),
        }
        .into()),
        CounterexampleKind::Injection => Ok(match lemma_10_1_injection(&alg, &config(g)) {
            Ok(rep) => report::injection_json(&alg, &rep),
            Err(e @ (AnalysisError::PerfectAlgebra | AnalysisError::FieldTooSmall)) => not_applicable(alg.name(), &e.to_string()),
            Err(e) => return Err(e.into()),
        }
        .into()),
    }
}
