//! Embedding spec files: a self-describing TOML document, one spec per
//! file, with fields mirroring [`EmbeddingSpec`].  Weights are written as
//! comma-separated fundamental coordinates, rationals as `p/q`.  The writer
//! emits keys in a fixed documented order so serialization is byte-stable;
//! user files can be loaded alongside the built-in catalog without
//! recompiling.
//!
//! Layout:
//!
//! ```toml
//! schema = "1"
//! name = "f4-in-e6"
//! ambient = "E6"
//! automorphism_order = 2      # omitted for non-graded specs
//! equal_casimir = true
//!
//! [[factor]]
//! kind = "simple"             # or "abelian" (with dim = ...)
//! type = "F4"
//! index = "1"
//!
//! [[component]]
//! grading = 1
//! weights = ["0,0,0,1"]       # one entry per simple factor, in order
//! center_norm = "0"
//! dim = 26
//!
//! [[annotation]]
//! weight = "0,0,1,0"          # omitted for blanket annotations
//! resolution = "..."
//! locator = "explicit-singular-vector"
//! extend_grading = 0          # omitted unless the weight extends the decomposition
//! ```

use num::{BigRational, One, Signed, Zero};
use serde::Deserialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::embed::{
    Annotation, BranchingComponent, EmbeddingSpec, FactorKind, SubalgebraFactor,
};
use crate::error::{Error, Result};
use crate::lie::{LieType, RootSystem, Weight};

pub const SPECFILE_SCHEMA: &str = "1";

#[derive(Debug, Deserialize)]
struct RawSpec {
    schema: String,
    name: String,
    #[serde(default)]
    rank: Option<usize>,
    ambient: String,
    #[serde(default)]
    automorphism_order: Option<u32>,
    #[serde(default)]
    equal_casimir: bool,
    #[serde(default, rename = "factor")]
    factors: Vec<RawFactor>,
    #[serde(default, rename = "component")]
    components: Vec<RawComponent>,
    #[serde(default, rename = "annotation")]
    annotations: Vec<RawAnnotation>,
}

#[derive(Debug, Deserialize)]
struct RawFactor {
    kind: String,
    #[serde(default, rename = "type")]
    lie_type: Option<String>,
    #[serde(default)]
    dim: Option<u32>,
    #[serde(default)]
    index: Option<String>,
}

#[derive(Debug, Deserialize)]
struct RawComponent {
    grading: u32,
    #[serde(default)]
    weights: Vec<String>,
    #[serde(default)]
    center_norm: Option<String>,
    dim: u64,
}

#[derive(Debug, Deserialize)]
struct RawAnnotation {
    #[serde(default)]
    weight: Option<String>,
    resolution: String,
    locator: String,
    #[serde(default)]
    extend_grading: Option<u32>,
}

fn parse_rational(s: &str, what: &str) -> Result<BigRational> {
    s.trim().parse().map_err(|_| Error::Parse {
        input: s.to_string(),
        expected: format!("{} as a rational `p/q`", what),
    })
}

fn parse_int_coords(s: &str, rank: usize) -> Result<Vec<i64>> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            input: s.to_string(),
            expected: "comma-separated integer coordinates".to_string(),
        })?;
    if coords.len() != rank {
        return Err(Error::Parse {
            input: s.to_string(),
            expected: format!("{} coordinates", rank),
        });
    }
    Ok(coords)
}

fn parse_weight(s: &str, system: &Arc<RootSystem>) -> Result<Weight> {
    let coords: Vec<BigRational> = s
        .split(',')
        .map(|c| parse_rational(c, "weight coordinate"))
        .collect::<Result<_>>()?;
    Weight::new(system, coords)
}

/// Parses one spec from TOML text.
pub fn from_toml_str(text: &str) -> Result<EmbeddingSpec> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| Error::SpecFile {
        detail: e.to_string(),
    })?;
    if raw.schema != SPECFILE_SCHEMA {
        return Err(Error::SpecFile {
            detail: format!(
                "unsupported schema `{}` (expected `{}`)",
                raw.schema, SPECFILE_SCHEMA
            ),
        });
    }
    let ambient = RootSystem::build(LieType::parse(&raw.ambient)?)?;

    let mut factors = Vec::new();
    let mut simple_systems = Vec::new();
    for f in &raw.factors {
        match f.kind.as_str() {
            "simple" => {
                let t = f.lie_type.as_ref().ok_or_else(|| Error::SpecFile {
                    detail: "simple factor requires `type`".into(),
                })?;
                let rs = RootSystem::build(LieType::parse(t)?)?;
                let index = match &f.index {
                    Some(s) => parse_rational(s, "factor index")?,
                    None => BigRational::one(),
                };
                if !index.is_integer() || !index.is_positive() {
                    return Err(Error::SpecFile {
                        detail: format!("simple factor index `{}` must be a positive integer", index),
                    });
                }
                simple_systems.push(Arc::clone(&rs));
                factors.push(SubalgebraFactor {
                    kind: FactorKind::Simple(rs),
                    index,
                });
            }
            "abelian" => {
                let dim = f.dim.ok_or_else(|| Error::SpecFile {
                    detail: "abelian factor requires `dim`".into(),
                })?;
                factors.push(SubalgebraFactor::abelian(dim));
            }
            other => {
                return Err(Error::SpecFile {
                    detail: format!("unknown factor kind `{}`", other),
                })
            }
        }
    }

    let mut components = Vec::new();
    for (i, c) in raw.components.iter().enumerate() {
        if c.weights.len() != simple_systems.len() {
            return Err(Error::SpecFile {
                detail: format!(
                    "component {} carries {} weights but the spec has {} simple factors",
                    i,
                    c.weights.len(),
                    simple_systems.len()
                ),
            });
        }
        let factor_weights: Vec<Weight> = c
            .weights
            .iter()
            .zip(&simple_systems)
            .map(|(s, rs)| parse_weight(s, rs))
            .collect::<Result<_>>()?;
        let center_norm = match &c.center_norm {
            Some(s) => parse_rational(s, "center norm")?,
            None => BigRational::zero(),
        };
        components.push(BranchingComponent {
            grading: c.grading,
            factor_weights,
            center_norm,
            dim: c.dim,
        });
    }

    let mut annotations = Vec::new();
    for a in &raw.annotations {
        let weight = match &a.weight {
            Some(s) => {
                let rank = simple_systems
                    .first()
                    .map(|rs| rs.rank())
                    .ok_or_else(|| Error::SpecFile {
                        detail: "weighted annotation requires a simple factor".into(),
                    })?;
                Some(parse_int_coords(s, rank)?)
            }
            None => None,
        };
        annotations.push(Annotation {
            weight,
            resolution: a.resolution.clone(),
            locator: a.locator.clone(),
            extend_grading: a.extend_grading,
        });
    }

    Ok(EmbeddingSpec::new(
        raw.name,
        raw.rank,
        ambient,
        raw.automorphism_order,
        factors,
        components,
        annotations,
        raw.equal_casimir,
    ))
}

pub fn load_file(path: &Path) -> Result<EmbeddingSpec> {
    let text = std::fs::read_to_string(path)?;
    from_toml_str(&text)
}

fn toml_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn weight_field(w: &Weight) -> String {
    let parts: Vec<String> = w.coords().iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

fn int_coords_field(w: &[i64]) -> String {
    let parts: Vec<String> = w.iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

/// Serializes a spec with keys in the fixed documented order.
pub fn to_toml_string(spec: &EmbeddingSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "schema = \"{}\"", SPECFILE_SCHEMA);
    let _ = writeln!(out, "name = \"{}\"", toml_escape(&spec.name));
    if let Some(l) = spec.rank_param {
        let _ = writeln!(out, "rank = {}", l);
    }
    let _ = writeln!(out, "ambient = \"{}\"", spec.ambient.lie_type());
    if let Some(o) = spec.automorphism_order {
        let _ = writeln!(out, "automorphism_order = {}", o);
    }
    let _ = writeln!(out, "equal_casimir = {}", spec.equal_casimir);
    for f in &spec.factors {
        let _ = writeln!(out);
        let _ = writeln!(out, "[[factor]]");
        match &f.kind {
            FactorKind::Simple(rs) => {
                let _ = writeln!(out, "kind = \"simple\"");
                let _ = writeln!(out, "type = \"{}\"", rs.lie_type());
                let _ = writeln!(out, "index = \"{}\"", f.index);
            }
            FactorKind::Abelian { dim } => {
                let _ = writeln!(out, "kind = \"abelian\"");
                let _ = writeln!(out, "dim = {}", dim);
            }
        }
    }
    for c in &spec.components {
        let _ = writeln!(out);
        let _ = writeln!(out, "[[component]]");
        let _ = writeln!(out, "grading = {}", c.grading);
        let weights: Vec<String> = c
            .factor_weights
            .iter()
            .map(|w| format!("\"{}\"", weight_field(w)))
            .collect();
        let _ = writeln!(out, "weights = [{}]", weights.join(", "));
        let _ = writeln!(out, "center_norm = \"{}\"", c.center_norm);
        let _ = writeln!(out, "dim = {}", c.dim);
    }
    for a in &spec.annotations {
        let _ = writeln!(out);
        let _ = writeln!(out, "[[annotation]]");
        if let Some(w) = &a.weight {
            let _ = writeln!(out, "weight = \"{}\"", int_coords_field(w));
        }
        let _ = writeln!(out, "resolution = \"{}\"", toml_escape(&a.resolution));
        let _ = writeln!(out, "locator = \"{}\"", toml_escape(&a.locator));
        if let Some(g) = a.extend_grading {
            let _ = writeln!(out, "extend_grading = {}", g);
        }
    }
    out
}

/// Writes `spec` into `dir` as `<display-name>.toml`.
pub fn save_file(spec: &EmbeddingSpec, dir: &Path) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(format!("{}.toml", spec.display_name()));
    std::fs::write(&path, to_toml_string(spec))?;
    Ok(path)
}
