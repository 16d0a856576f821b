//! Declarative embeddings `g0 < g`: subalgebra factors with Dynkin indices,
//! graded branching components, catalog annotations, and the structural
//! validation that pins the branching data (dimension identity, index
//! integrality, Casimir equality).
//!
//! Branching data is stored declaratively and validated by identities rather
//! than derived from explicit root-space embeddings; the identities determine
//! the data uniquely enough for every downstream computation.

use num::{BigInt, BigRational, FromPrimitive, One, Signed, Zero};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lie::{format_int_coords, RootSystem, Weight};
use crate::rep;

/// One factor of the reductive subalgebra `g0`.
#[derive(Debug, Clone)]
pub enum FactorKind {
    Simple(Arc<RootSystem>),
    Abelian { dim: u32 },
}

#[derive(Debug, Clone)]
pub struct SubalgebraFactor {
    pub kind: FactorKind,
    /// Dynkin index `a_i` of the factor inside `g`; a positive integer for
    /// simple factors, fixed to 1 for abelian factors.
    pub index: BigRational,
}

impl SubalgebraFactor {
    pub fn simple(system: Arc<RootSystem>, index: u64) -> Self {
        SubalgebraFactor {
            kind: FactorKind::Simple(system),
            index: BigRational::from_u64(index).unwrap(),
        }
    }

    pub fn abelian(dim: u32) -> Self {
        SubalgebraFactor {
            kind: FactorKind::Abelian { dim },
            index: BigRational::one(),
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self.kind, FactorKind::Simple(_))
    }

    pub fn label(&self) -> String {
        match &self.kind {
            FactorKind::Simple(rs) => rs.lie_type().to_string(),
            FactorKind::Abelian { dim: 1 } => "u(1)".to_string(),
            FactorKind::Abelian { dim } => format!("u(1)^{}", dim),
        }
    }
}

/// One graded summand of `g = g0 + g1 + ... + gs`.
#[derive(Debug, Clone)]
pub struct BranchingComponent {
    /// Eigenvalue exponent of the automorphism for graded specs; a plain
    /// sector label for non-graded ones.
    pub grading: u32,
    /// One dominant highest weight per simple factor, in factor order.
    pub factor_weights: Vec<Weight>,
    /// Squared norm of the central charge of this component under the
    /// ambient normalized form; zero when `g0` has no abelian part.
    pub center_norm: BigRational,
    pub dim: u64,
}

impl BranchingComponent {
    /// Builds a component with `dim` derived from the factor weights.
    pub fn new(grading: u32, factor_weights: Vec<Weight>, center_norm: BigRational) -> Self {
        let mut dim = BigInt::one();
        for w in &factor_weights {
            dim *= w.weyl_dim().expect("component weights are dominant integral");
        }
        let dim: u64 = dim.try_into().expect("component dimension fits u64");
        BranchingComponent {
            grading,
            factor_weights,
            center_norm,
            dim,
        }
    }

    pub fn weight_labels(&self) -> String {
        let parts: Vec<String> = self.factor_weights.iter().map(|w| w.to_string()).collect();
        parts.join("x")
    }
}

/// Catalog annotation for cases the integrality scan cannot settle on its
/// own: either a per-weight resolution (with an optional decomposition
/// extension) or a blanket literature note covering the whole spec.
#[derive(Debug, Clone)]
pub struct Annotation {
    /// Coordinates in the single simple factor; `None` marks a blanket
    /// annotation matching any integral finding.
    pub weight: Option<Vec<i64>>,
    pub resolution: String,
    pub locator: String,
    /// When set, the annotated weight enters the claimed decomposition as an
    /// extra module at this grading.
    pub extend_grading: Option<u32>,
}

/// One summand of the ambient adjoint restricted to `g0`.
#[derive(Debug, Clone)]
pub struct AdjointSummand {
    /// One weight per simple factor (all zero for the center summand).
    pub factor_weights: Vec<Weight>,
    pub dim: u64,
    pub label: String,
}

/// Declarative description of an embedding `g0 < g`.
#[derive(Debug, Clone)]
pub struct EmbeddingSpec {
    pub name: String,
    /// Rank parameter for parametric families.
    pub rank_param: Option<usize>,
    pub ambient: Arc<RootSystem>,
    /// `s + 1` for specs graded by a finite-order automorphism; `None` for
    /// the non-graded examples.
    pub automorphism_order: Option<u32>,
    pub factors: Vec<SubalgebraFactor>,
    pub components: Vec<BranchingComponent>,
    pub annotations: Vec<Annotation>,
    /// Marks the spec as claiming equal Casimir eigenvalues (and equal
    /// center norms) across components.
    pub equal_casimir: bool,
    /// Ambient adjoint as a `g0`-module: factor adjoints plus components.
    pub adjoint_branching: Vec<AdjointSummand>,
}

impl EmbeddingSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        rank_param: Option<usize>,
        ambient: Arc<RootSystem>,
        automorphism_order: Option<u32>,
        factors: Vec<SubalgebraFactor>,
        components: Vec<BranchingComponent>,
        annotations: Vec<Annotation>,
        equal_casimir: bool,
    ) -> Self {
        let adjoint_branching = derive_adjoint_branching(&factors, &components);
        EmbeddingSpec {
            name: name.into(),
            rank_param,
            ambient,
            automorphism_order,
            factors,
            components,
            annotations,
            equal_casimir,
            adjoint_branching,
        }
    }

    /// Recomputes the derived adjoint branching after direct field edits.
    pub fn refresh_adjoint_branching(&mut self) {
        self.adjoint_branching = derive_adjoint_branching(&self.factors, &self.components);
    }

    pub fn display_name(&self) -> String {
        match self.rank_param {
            Some(l) => format!("{}({})", self.name, l),
            None => self.name.clone(),
        }
    }

    pub fn subalgebra_label(&self) -> String {
        let parts: Vec<String> = self.factors.iter().map(|f| f.label()).collect();
        parts.join("+")
    }

    pub fn simple_factors(&self) -> impl Iterator<Item = (usize, &Arc<RootSystem>, &BigRational)> {
        self.factors
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match &f.kind {
                FactorKind::Simple(rs) => Some((i, rs, &f.index)),
                FactorKind::Abelian { .. } => None,
            })
    }

    /// The unique simple factor, if `g0` is simple.
    pub fn single_simple_factor(&self) -> Option<(&Arc<RootSystem>, &BigRational)> {
        if self.factors.len() == 1 {
            if let FactorKind::Simple(rs) = &self.factors[0].kind {
                return Some((rs, &self.factors[0].index));
            }
        }
        None
    }

    pub fn abelian_dim(&self) -> u32 {
        self.factors
            .iter()
            .map(|f| match f.kind {
                FactorKind::Abelian { dim } => dim,
                FactorKind::Simple(_) => 0,
            })
            .sum()
    }

    /// Index of the weight within each component's `factor_weights` that
    /// corresponds to simple factor `factor_idx` (components carry weights
    /// for simple factors only, in order).
    pub(crate) fn weight_slot(&self, factor_idx: usize) -> usize {
        self.factors[..factor_idx]
            .iter()
            .filter(|f| f.is_simple())
            .count()
    }

    /// Looks up an annotation for an integral finding at `weight` (single
    /// simple factor coordinates).  Per-weight annotations win over blanket
    /// ones.
    pub fn annotation_for(&self, weight: &[i64]) -> Option<(usize, &Annotation)> {
        self.annotations
            .iter()
            .enumerate()
            .find(|(_, a)| a.weight.as_deref() == Some(weight))
            .or_else(|| {
                self.annotations
                    .iter()
                    .enumerate()
                    .find(|(_, a)| a.weight.is_none())
            })
    }
}

fn derive_adjoint_branching(
    factors: &[SubalgebraFactor],
    components: &[BranchingComponent],
) -> Vec<AdjointSummand> {
    let simple_systems: Vec<&Arc<RootSystem>> = factors
        .iter()
        .filter_map(|f| match &f.kind {
            FactorKind::Simple(rs) => Some(rs),
            FactorKind::Abelian { .. } => None,
        })
        .collect();
    let zero_weights =
        || -> Vec<Weight> { simple_systems.iter().map(|rs| Weight::zero(rs)).collect() };
    let mut out = Vec::new();
    let mut simple_seen = 0usize;
    for factor in factors {
        match &factor.kind {
            FactorKind::Simple(rs) => {
                let mut weights = zero_weights();
                weights[simple_seen] = Weight::theta(rs);
                simple_seen += 1;
                out.push(AdjointSummand {
                    factor_weights: weights,
                    dim: rs.dimension(),
                    label: format!("adjoint {}", rs.lie_type()),
                });
            }
            FactorKind::Abelian { dim } => {
                out.push(AdjointSummand {
                    factor_weights: zero_weights(),
                    dim: *dim as u64,
                    label: "center".to_string(),
                });
            }
        }
    }
    for (i, c) in components.iter().enumerate() {
        out.push(AdjointSummand {
            factor_weights: c.factor_weights.clone(),
            dim: c.dim,
            label: format!("component {} (grading {})", i, c.grading),
        });
    }
    out
}

/// Outcome of one structural check; failures are data, not errors.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}",
            if self.passed { "ok" } else { "FAIL" },
            self.name,
            self.witness
        )
    }
}

/// Dynkin multi-index of the embedding, one entry per factor, computed from
/// the restriction of the ambient adjoint:
/// `a_i = (h0_i + sum_c (dim_c / dim_{c,i}) x_i(mu_{c,i})) / h(g)`.
pub fn embedding_index(spec: &EmbeddingSpec) -> Result<Vec<BigRational>> {
    if spec.adjoint_branching.is_empty() {
        return Err(Error::Validation {
            check: "adjoint-branching".into(),
            detail: format!("spec `{}` lacks adjoint branching data", spec.name),
        });
    }
    let h_g = BigRational::from_u64(spec.ambient.dual_coxeter()).unwrap();
    let mut out = Vec::with_capacity(spec.factors.len());
    for (fi, factor) in spec.factors.iter().enumerate() {
        match &factor.kind {
            FactorKind::Abelian { .. } => out.push(BigRational::one()),
            FactorKind::Simple(rs) => {
                let slot = spec.weight_slot(fi);
                let mut total = BigRational::from_u64(rs.dual_coxeter()).unwrap();
                for c in &spec.components {
                    let w = &c.factor_weights[slot];
                    let w_dim = w.weyl_dim()?;
                    // dims of all other tensor slots (abelian charge lines
                    // contribute factor 1)
                    let others = BigRational::new(BigInt::from(c.dim), w_dim);
                    total += others * rep::dynkin_index_rep(w)?;
                }
                let a = total / h_g.clone();
                if !a.is_integer() || !a.is_positive() {
                    return Err(Error::Validation {
                        check: "index-integrality".into(),
                        detail: format!(
                            "factor {} of `{}` has non-integral Dynkin index {}",
                            rs.lie_type(),
                            spec.name,
                            a
                        ),
                    });
                }
                out.push(a);
            }
        }
    }
    Ok(out)
}

/// Runs every structural check; returns one result per check with exact
/// witness values.
pub fn validate(spec: &EmbeddingSpec) -> Vec<CheckResult> {
    let mut results = Vec::new();

    // dimension identity over the adjoint branching
    let lhs: u64 = spec.adjoint_branching.iter().map(|s| s.dim).sum();
    let rhs = spec.ambient.dimension();
    results.push(CheckResult {
        name: "dimension".into(),
        passed: lhs == rhs,
        witness: format!(
            "sum of branching dims {} vs dim {} = {}",
            lhs,
            spec.ambient.lie_type(),
            rhs
        ),
    });

    // declared component dimensions match the Weyl dimension products
    let mut dims_ok = true;
    let mut dim_witness = Vec::new();
    for (i, c) in spec.components.iter().enumerate() {
        let mut expect = BigInt::one();
        let mut failed = false;
        for w in &c.factor_weights {
            match w.weyl_dim() {
                Ok(d) => expect *= d,
                Err(e) => {
                    failed = true;
                    dims_ok = false;
                    dim_witness.push(format!("component {}: {}", i, e));
                }
            }
        }
        if !failed && BigInt::from(c.dim) != expect {
            dims_ok = false;
            dim_witness.push(format!(
                "component {}: declared {} vs computed {}",
                i, c.dim, expect
            ));
        }
    }
    results.push(CheckResult {
        name: "component-dims".into(),
        passed: dims_ok,
        witness: if dims_ok {
            format!("{} components consistent", spec.components.len())
        } else {
            dim_witness.join("; ")
        },
    });

    // Dynkin multi-index: integral for simple factors and equal to the
    // declared per-factor indices
    match embedding_index(spec) {
        Ok(indices) => {
            let declared: Vec<BigRational> =
                spec.factors.iter().map(|f| f.index.clone()).collect();
            let passed = indices == declared;
            let fmt_list = |v: &[BigRational]| {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("({})", parts.join(","))
            };
            results.push(CheckResult {
                name: "index".into(),
                passed,
                witness: format!(
                    "computed {} declared {}",
                    fmt_list(&indices),
                    fmt_list(&declared)
                ),
            });
        }
        Err(e) => results.push(CheckResult {
            name: "index".into(),
            passed: false,
            witness: e.to_string(),
        }),
    }

    // Casimir equality across components, per simple factor, plus equal
    // center norms (the graded eigenvalue condition is solvable for one k
    // only when these hold)
    if spec.equal_casimir {
        let mut passed = true;
        let mut witness = Vec::new();
        for (fi, rs, _) in spec.simple_factors() {
            let slot = spec.weight_slot(fi);
            let mut values = Vec::new();
            for c in &spec.components {
                match c.factor_weights[slot].casimir() {
                    Ok(v) => values.push(v),
                    Err(e) => {
                        passed = false;
                        witness.push(e.to_string());
                    }
                }
            }
            if values.windows(2).any(|w| w[0] != w[1]) {
                passed = false;
            }
            if !values.is_empty() {
                let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                witness.push(format!("{}: ({})", rs.lie_type(), parts.join(",")));
            }
        }
        let norms: Vec<&BigRational> = spec.components.iter().map(|c| &c.center_norm).collect();
        if norms.windows(2).any(|w| w[0] != w[1]) {
            passed = false;
            let parts: Vec<String> = norms.iter().map(|v| v.to_string()).collect();
            witness.push(format!("center norms ({})", parts.join(",")));
        }
        results.push(CheckResult {
            name: "casimir-equality".into(),
            passed,
            witness: witness.join("; "),
        });
    }

    // grading labels for graded specs
    if let Some(order) = spec.automorphism_order {
        let s = order.saturating_sub(1);
        let mut passed = order >= 2;
        let mut seen = std::collections::BTreeSet::new();
        for c in &spec.components {
            if c.grading < 1 || c.grading > s || !seen.insert(c.grading) {
                passed = false;
            }
        }
        results.push(CheckResult {
            name: "gradings".into(),
            passed,
            witness: format!(
                "order {} with component gradings {:?}",
                order,
                spec.components.iter().map(|c| c.grading).collect::<Vec<_>>()
            ),
        });
    }

    // center norms require an abelian factor and must be nonnegative
    let has_abelian = spec.abelian_dim() > 0;
    let mut norms_ok = true;
    for c in &spec.components {
        if c.center_norm.is_negative() || (!has_abelian && !c.center_norm.is_zero()) {
            norms_ok = false;
        }
    }
    results.push(CheckResult {
        name: "center-norms".into(),
        passed: norms_ok,
        witness: if has_abelian {
            "abelian factor present".into()
        } else {
            "no abelian factor; all center norms zero".into()
        },
    });

    results
}

pub fn is_valid(spec: &EmbeddingSpec) -> bool {
    validate(spec).iter().all(|c| c.passed)
}

/// Renders an annotation weight for reports.
pub fn annotation_weight_label(a: &Annotation) -> String {
    match &a.weight {
        Some(w) => format_int_coords(w),
        None => "*".to_string(),
    }
}
