//! Machine-readable report documents and their markdown rendering.
//!
//! Every CLI invocation produces one [`ReportDocument`]: a schema-versioned
//! envelope with a command echo, a structured payload, and diagnostics.
//! Serialization is byte-stable for identical inputs: struct fields have a
//! fixed order, collections are sorted, rationals print in lowest terms, and
//! weights print as bracketed fundamental coordinates.

use num::BigRational;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::catalog;
use crate::conformal::{solve_conformal_levels, LevelSolution, SolveOutcome};
use crate::embed::{self, EmbeddingSpec};
use crate::error::{Error, Result};
use crate::exec;
use crate::lie::{format_int_coords, RootSystem, Weight};
use crate::rep::{Decomposition, Limits};
use crate::verify::{
    self, ChainReport, Classification, StepVerification, VerificationReport,
};

pub const SCHEMA_VERSION: &str = "1";

/// Envelope for one command invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub results: serde_json::Value,
    pub diagnostics: Vec<String>,
}

impl ReportDocument {
    pub fn new(
        command: impl Into<String>,
        results: &impl Serialize,
        diagnostics: Vec<String>,
    ) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.into(),
            results: serde_json::to_value(results).expect("payloads serialize"),
            diagnostics,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            input: "json document".into(),
            expected: format!("report document: {}", e),
        })
    }
}

fn rat(r: &BigRational) -> String {
    r.to_string()
}

fn weight_str(w: &Weight) -> String {
    w.to_string()
}

// ---------------------------------------------------------------------------
// payloads

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LieInfoPayload {
    pub lie_type: String,
    pub dual_coxeter: u64,
    pub dimension: u64,
    pub num_positive_roots: usize,
    pub theta: String,
    pub rho: String,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<String>,
}

pub fn lie_info_payload(rs: &RootSystem) -> LieInfoPayload {
    LieInfoPayload {
        lie_type: rs.lie_type().to_string(),
        dual_coxeter: rs.dual_coxeter(),
        dimension: rs.dimension(),
        num_positive_roots: rs.num_positive_roots(),
        theta: format_int_coords(rs.theta_int()),
        rho: format_int_coords(&vec![1; rs.rank()]),
        cartan: rs.cartan().to_vec(),
        symmetrizers: rs.symmetrizers().iter().map(rat).collect(),
    }
}

pub fn render_lie_info_markdown(p: &LieInfoPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}", p.lie_type);
    let _ = writeln!(out);
    let _ = writeln!(out, "- dual Coxeter number: {}", p.dual_coxeter);
    let _ = writeln!(out, "- dimension: {}", p.dimension);
    let _ = writeln!(out, "- positive roots: {}", p.num_positive_roots);
    let _ = writeln!(out, "- highest root theta: {}", p.theta);
    let _ = writeln!(out, "- rho: {}", p.rho);
    let _ = writeln!(
        out,
        "- symmetrizers: ({})",
        p.symmetrizers.join(", ")
    );
    let _ = writeln!(out);
    let _ = writeln!(out, "Cartan matrix:");
    let _ = writeln!(out);
    for row in &p.cartan {
        let cells: Vec<String> = row.iter().map(|c| format!("{:>2}", c)).collect();
        let _ = writeln!(out, "    [ {} ]", cells.join(" "));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TensorTermPayload {
    pub weight: String,
    pub multiplicity: u64,
    pub dim: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TensorPayload {
    pub lie_type: String,
    pub left: String,
    pub right: String,
    pub terms: Vec<TensorTermPayload>,
    pub total_dim: String,
    pub product_dim: String,
    pub dimension_conserved: bool,
}

pub fn tensor_payload(left: &Weight, right: &Weight, d: &Decomposition) -> TensorPayload {
    let terms: Vec<TensorTermPayload> = d
        .iter()
        .map(|(w, m)| TensorTermPayload {
            weight: weight_str(&w),
            multiplicity: m,
            dim: w.weyl_dim().expect("dominant").to_string(),
        })
        .collect();
    let total = d.dimension();
    let product = left.weyl_dim().expect("dominant") * right.weyl_dim().expect("dominant");
    TensorPayload {
        lie_type: d.system().lie_type().to_string(),
        left: weight_str(left),
        right: weight_str(right),
        terms,
        total_dim: total.to_string(),
        product_dim: product.to_string(),
        dimension_conserved: total == product,
    }
}

pub fn render_tensor_markdown(p: &TensorPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {}: {} x {}", p.lie_type, p.left, p.right);
    let _ = writeln!(out);
    let _ = writeln!(out, "| weight | multiplicity | dim |");
    let _ = writeln!(out, "|---|---|---|");
    for t in &p.terms {
        let _ = writeln!(out, "| {} | {} | {} |", t.weight, t.multiplicity, t.dim);
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "dimension check: {} = {} ({})",
        p.total_dim,
        p.product_dim,
        if p.dimension_conserved { "ok" } else { "FAIL" }
    );
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralChargePayload {
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionPayload {
    pub k: String,
    pub factor_levels: Vec<String>,
    pub eigenvalue_witnesses: Vec<String>,
    pub central_charge: CentralChargePayload,
}

fn solution_payload(s: &LevelSolution) -> SolutionPayload {
    SolutionPayload {
        k: rat(&s.k),
        factor_levels: s.factor_levels.iter().map(rat).collect(),
        eigenvalue_witnesses: s.eigenvalue_witnesses.iter().map(rat).collect(),
        central_charge: CentralChargePayload {
            lhs: rat(&s.central_charge_lhs),
            rhs: rat(&s.central_charge_rhs),
            equal: s.central_charge_lhs == s.central_charge_rhs,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationPayload {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvePayload {
    pub spec: String,
    pub ambient: String,
    pub subalgebra: String,
    pub dynkin_index: Vec<String>,
    pub validation: Vec<ValidationPayload>,
    pub solutions: Vec<SolutionPayload>,
}

pub fn solve_payload(spec: &EmbeddingSpec, outcome: &SolveOutcome) -> SolvePayload {
    let indices = embed::embedding_index(spec)
        .map(|v| v.iter().map(rat).collect())
        .unwrap_or_default();
    let validation = embed::validate(spec)
        .into_iter()
        .map(|c| ValidationPayload {
            name: c.name,
            passed: c.passed,
            witness: c.witness,
        })
        .collect();
    SolvePayload {
        spec: spec.display_name(),
        ambient: spec.ambient.lie_type().to_string(),
        subalgebra: spec.subalgebra_label(),
        dynkin_index: indices,
        validation,
        solutions: outcome.solutions.iter().map(solution_payload).collect(),
    }
}

pub fn render_solve_markdown(p: &SolvePayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} ({} < {})", p.spec, p.subalgebra, p.ambient);
    let _ = writeln!(out);
    let _ = writeln!(out, "Dynkin multi-index: ({})", p.dynkin_index.join(", "));
    for v in &p.validation {
        let _ = writeln!(
            out,
            "- check {}: {} ({})",
            v.name,
            if v.passed { "ok" } else { "FAIL" },
            v.witness
        );
    }
    let _ = writeln!(out);
    if p.solutions.is_empty() {
        let _ = writeln!(out, "No rational conformal levels.");
    }
    for s in &p.solutions {
        let _ = writeln!(
            out,
            "- k = {} (factor levels {}; eigenvalues {}; central charge {} = {} {})",
            s.k,
            s.factor_levels.join(", "),
            s.eigenvalue_witnesses.join(", "),
            s.central_charge.lhs,
            s.central_charge.rhs,
            if s.central_charge.equal { "ok" } else { "FAIL" }
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnotationPayload {
    pub weight: String,
    pub resolution: String,
    pub locator: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FindingPayload {
    pub source: (u32, u32),
    pub weight: String,
    pub multiplicity: u64,
    pub delta: String,
    pub classification: String,
    pub annotation: Option<AnnotationPayload>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairPayload {
    pub i: u32,
    pub j: u32,
    pub l: u32,
    pub left: String,
    pub right: String,
    pub expected: String,
    pub expected_present: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyPayload {
    pub spec: String,
    pub ambient: String,
    pub subalgebra: String,
    pub k: String,
    pub k_prime: String,
    pub status: String,
    pub pairs: Vec<PairPayload>,
    pub findings: Vec<FindingPayload>,
    pub vacuum_discharges: Vec<(u32, u32)>,
    pub decomposition: String,
}

pub fn verify_payload(spec: &EmbeddingSpec, report: &VerificationReport) -> VerifyPayload {
    let findings = report
        .findings
        .iter()
        .map(|f| {
            let annotation = match &f.classification {
                Classification::IntegralAnnotated { annotation } => {
                    spec.annotations.get(*annotation).map(|a| AnnotationPayload {
                        weight: embed::annotation_weight_label(a),
                        resolution: a.resolution.clone(),
                        locator: a.locator.clone(),
                    })
                }
                _ => None,
            };
            FindingPayload {
                source: f.source,
                weight: format_int_coords(&f.weight),
                multiplicity: f.multiplicity,
                delta: rat(&f.delta),
                classification: f.classification.as_str().to_string(),
                annotation,
            }
        })
        .collect();
    VerifyPayload {
        spec: report.display_name.clone(),
        ambient: report.ambient_label.clone(),
        subalgebra: report.factor_label.clone(),
        k: rat(&report.k),
        k_prime: rat(&report.k_prime),
        status: report.status.as_str().to_string(),
        pairs: report
            .pairs
            .iter()
            .map(|p| PairPayload {
                i: p.i,
                j: p.j,
                l: p.l,
                left: format_int_coords(&p.left),
                right: format_int_coords(&p.right),
                expected: format_int_coords(&p.expected),
                expected_present: p.expected_present,
            })
            .collect(),
        findings,
        vacuum_discharges: report.vacuum_discharges.clone(),
        decomposition: report.decomposition_string(),
    }
}

pub fn render_verify_markdown(p: &VerifyPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# {} ({} < {}) at k = {}",
        p.spec, p.subalgebra, p.ambient, p.k
    );
    let _ = writeln!(out);
    let _ = writeln!(out, "status: **{}** (k' = {})", p.status, p.k_prime);
    let _ = writeln!(out);
    let _ = writeln!(out, "| pair | grading | expected | present |");
    let _ = writeln!(out, "|---|---|---|---|");
    for pair in &p.pairs {
        let _ = writeln!(
            out,
            "| ({},{}) | {} | {} | {} |",
            pair.i,
            pair.j,
            pair.l,
            pair.expected,
            if pair.expected_present { "yes" } else { "NO" }
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "| finding | pair | mult | delta | classification |");
    let _ = writeln!(out, "|---|---|---|---|---|");
    for f in &p.findings {
        let _ = writeln!(
            out,
            "| {} | ({},{}) | {} | {} | {} |",
            f.weight, f.source.0, f.source.1, f.multiplicity, f.delta, f.classification
        );
    }
    let _ = writeln!(out);
    let mut seen = std::collections::BTreeSet::new();
    for f in &p.findings {
        if let Some(a) = &f.annotation {
            if seen.insert((f.weight.clone(), a.locator.clone())) {
                let _ = writeln!(out, "- {} [{}]: {}", f.weight, a.locator, a.resolution);
            }
        }
    }
    if !p.decomposition.is_empty() {
        let _ = writeln!(out);
        let _ = writeln!(out, "decomposition: {}", p.decomposition);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainStepPayload {
    pub spec: String,
    pub ambient: String,
    pub subalgebra: String,
    pub level: String,
    pub sub_level: String,
    pub conformal: bool,
    pub central_charge_equal: bool,
    pub mode: String,
    pub status: Option<String>,
    pub claims: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainPayload {
    pub k: String,
    pub steps: Vec<ChainStepPayload>,
    pub statements: Vec<String>,
}

pub fn chain_payload(report: &ChainReport) -> ChainPayload {
    let steps = report
        .steps
        .iter()
        .map(|s| {
            let (mode, status, claims) = match &s.verification {
                StepVerification::Scanned(r) => (
                    "scanned".to_string(),
                    Some(r.status.as_str().to_string()),
                    vec![r.decomposition_string()],
                ),
                StepVerification::AnnotationBacked { claims } => {
                    ("annotation-backed".to_string(), None, claims.clone())
                }
            };
            ChainStepPayload {
                spec: s.display_name.clone(),
                ambient: s.ambient_label.clone(),
                subalgebra: s.factor_label.clone(),
                level: rat(&s.level),
                sub_level: rat(&s.sub_level),
                conformal: s.conformal,
                central_charge_equal: s.central_charge_equal,
                mode,
                status,
                claims,
            }
        })
        .collect();
    ChainPayload {
        k: rat(&report.k),
        steps,
        statements: report.statements.clone(),
    }
}

pub fn render_chain_markdown(p: &ChainPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# chain at k = {}", p.k);
    let _ = writeln!(out);
    for s in &p.steps {
        let _ = writeln!(
            out,
            "- {}: {} < {} at level {} (k' = {}); conformal: {}; central charge: {}; {}{}",
            s.spec,
            s.subalgebra,
            s.ambient,
            s.level,
            s.sub_level,
            if s.conformal { "yes" } else { "NO" },
            if s.central_charge_equal { "ok" } else { "FAIL" },
            s.mode,
            s.status
                .as_ref()
                .map(|st| format!(" ({})", st))
                .unwrap_or_default()
        );
    }
    let _ = writeln!(out);
    for st in &p.statements {
        let _ = writeln!(out, "{}", st);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogRowPayload {
    pub spec: String,
    pub ambient: String,
    pub subalgebra: String,
    pub decomposition: String,
    pub k: Vec<String>,
    pub k_prime: Vec<String>,
    pub status: String,
    pub solutions: Vec<SolutionPayload>,
    pub diagnostics: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportAllPayload {
    pub rows: Vec<CatalogRowPayload>,
}

/// Solve-and-verify sweep over catalog entries; independent entries run in
/// parallel, rows are ordered by spec name and rank regardless of execution
/// order.
pub fn run_catalog_report(lo: usize, hi: usize, limits: Limits) -> ReportAllPayload {
    let mut specs = catalog::catalog_in_range(lo, hi);
    specs.sort_by_key(|s| (s.name.clone(), s.rank_param));
    let rows = exec::map_collect(limits.parallel, specs, |spec| catalog_row(&spec, limits));
    ReportAllPayload { rows }
}

fn catalog_row(spec: &EmbeddingSpec, limits: Limits) -> CatalogRowPayload {
    let mut diagnostics = Vec::new();
    let outcome = match solve_conformal_levels(spec) {
        Ok(o) => o,
        Err(e) => SolveOutcome {
            solutions: vec![],
            diagnostics: vec![e.to_string()],
        },
    };
    diagnostics.extend(outcome.diagnostics.clone());
    let ks: Vec<String> = outcome.solutions.iter().map(|s| rat(&s.k)).collect();
    let k_primes: Vec<String> = outcome
        .solutions
        .iter()
        .map(|s| {
            // the interesting level is the simple-factor one
            let simple_levels: Vec<String> = spec
                .factors
                .iter()
                .zip(&s.factor_levels)
                .filter(|(f, _)| f.is_simple())
                .map(|(_, l)| rat(l))
                .collect();
            simple_levels.join("/")
        })
        .collect();

    let graded_simple =
        spec.automorphism_order.is_some() && spec.single_simple_factor().is_some();
    let (status, decomposition) = if outcome.solutions.is_empty() {
        ("no-rational-level".to_string(), String::new())
    } else if graded_simple {
        if outcome.solutions.len() > 1 {
            diagnostics.push("multiple levels; verification runs per level with --level".into());
        }
        match verify::fusion_scan_with(spec, &outcome.solutions[0].k, limits) {
            Ok(report) => (
                report.status.as_str().to_string(),
                report.decomposition_string(),
            ),
            Err(e) => {
                diagnostics.push(e.to_string());
                ("scan-error".to_string(), String::new())
            }
        }
    } else {
        // Certified as a conformal embedding; the module decomposition is
        // outside the graded scan (annotation-backed when the catalog
        // carries a claim).
        let claim = spec
            .annotations
            .iter()
            .find(|a| a.weight.is_none())
            .map(|a| format!("[{}]", a.locator))
            .unwrap_or_default();
        ("conformal-only".to_string(), claim)
    };

    CatalogRowPayload {
        spec: spec.display_name(),
        ambient: spec.ambient.lie_type().to_string(),
        subalgebra: spec.subalgebra_label(),
        decomposition,
        k: ks,
        k_prime: k_primes,
        status,
        solutions: outcome.solutions.iter().map(solution_payload).collect(),
        diagnostics,
    }
}

pub fn render_report_all_markdown(p: &ReportAllPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| g | g0 | decomposition | k | k' | status |");
    let _ = writeln!(out, "|---|---|---|---|---|---|");
    for row in &p.rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} |",
            row.ambient,
            row.subalgebra,
            if row.decomposition.is_empty() {
                "-"
            } else {
                &row.decomposition
            },
            row.k.join(", "),
            row.k_prime.join(", "),
            row.status
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntryPayload {
    pub name: String,
    pub parametric: bool,
    pub min_rank: Option<usize>,
    pub max_rank: Option<usize>,
    pub about: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogListPayload {
    pub entries: Vec<CatalogEntryPayload>,
}

pub fn catalog_list_payload() -> CatalogListPayload {
    let mut entries: Vec<CatalogEntryPayload> = catalog::FIXED
        .iter()
        .map(|n| {
            let spec = catalog::build(n, None).expect("fixed entries build");
            CatalogEntryPayload {
                name: n.to_string(),
                parametric: false,
                min_rank: None,
                max_rank: None,
                about: format!(
                    "{} < {}",
                    spec.subalgebra_label(),
                    spec.ambient.lie_type()
                ),
            }
        })
        .collect();
    for f in catalog::FAMILIES {
        entries.push(CatalogEntryPayload {
            name: f.name.to_string(),
            parametric: true,
            min_rank: Some(f.min_rank),
            max_rank: Some(f.max_rank),
            about: f.about.to_string(),
        });
    }
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    CatalogListPayload { entries }
}

pub fn render_catalog_markdown(p: &CatalogListPayload) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| name | ranks | description |");
    let _ = writeln!(out, "|---|---|---|");
    for e in &p.entries {
        let ranks = match (e.min_rank, e.max_rank) {
            (Some(lo), Some(hi)) => format!("{}..={}", lo, hi),
            _ => "-".to_string(),
        };
        let _ = writeln!(out, "| {} | {} | {} |", e.name, ranks, e.about);
    }
    out
}
