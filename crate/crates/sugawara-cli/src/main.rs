//! Command-line surface for the conformal-embedding toolkit: catalog
//! browsing, ad-hoc Lie-algebra queries, tensor decompositions, level
//! solving, semisimplicity verification, and whole-catalog reports.
//!
//! Exit codes are a contract: 0 success/verified, 2 parse or usage error,
//! 3 unknown spec, 4 inconclusive verification, 5 unsupported configuration.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use sugawara::verify::Status;
use sugawara::{catalog, conformal, embed, rep, report, specfile, verify};
use sugawara::{Error, LieType, RootSystem, Weight};

#[derive(Debug, Parser)]
#[command(
    name = "sugawara",
    about = "Exact certification of conformal embeddings of affine vertex algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Json,
}

#[derive(Debug, Args)]
struct FormatArg {
    /// Output format: markdown report or machine-readable JSON document.
    #[arg(long, value_enum, default_value = "md")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combinatorial data of a simple Lie algebra (e.g. `G2`, `D5`).
    LieInfo {
        /// Family letter plus rank, Bourbaki numbering.
        type_string: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Tensor product decomposition of two irreducible modules.
    Tensor {
        type_string: String,
        /// Comma-separated nonnegative fundamental coordinates.
        weight_a: String,
        weight_b: String,
        /// Raise the dimension guard for large modules.
        #[arg(long)]
        max_dim: Option<u64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Solve for all rational conformal levels of an embedding.
    SolveLevel {
        /// Catalog spec name (omit when using --spec-file).
        spec: Option<String>,
        /// Rank parameter for parametric families.
        #[arg(long)]
        rank: Option<usize>,
        /// Load the spec from a TOML file instead of the catalog.
        #[arg(long)]
        spec_file: Option<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the graded semisimplicity scan at a solved level.
    Verify {
        spec: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        /// Level to verify at; defaults to the unique solved level.
        #[arg(long, allow_hyphen_values = true)]
        level: Option<String>,
        #[arg(long)]
        spec_file: Option<PathBuf>,
        #[arg(long)]
        max_dim: Option<u64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Verify a chain of nested embeddings (innermost first); entries are
    /// catalog names, optionally `name:rank`.
    Chain {
        #[arg(required = true)]
        specs: Vec<String>,
        /// Ambient level of the outermost embedding.
        #[arg(long, allow_hyphen_values = true, required = true)]
        level: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Solve and verify the whole catalog; renders the summary table.
    ReportAll {
        /// Rank range `lo..hi` for parametric families (inclusive).
        #[arg(long, default_value = "2..8")]
        rank_range: String,
        #[arg(long)]
        max_dim: Option<u64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List the built-in catalog, optionally exporting spec files.
    Catalog {
        /// Write every catalog entry as a TOML spec file into this directory.
        #[arg(long)]
        export_dir: Option<PathBuf>,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::UnknownSpec { .. } => 3,
        Error::UnsupportedConfiguration { .. } => 5,
        _ => 2,
    }
}

fn parse_level(s: &str) -> Result<BigRational, Error> {
    s.trim().parse().map_err(|_| Error::Parse {
        input: s.to_string(),
        expected: "a rational level `p/q`".to_string(),
    })
}

fn parse_weight_arg(system: &Arc<RootSystem>, s: &str) -> Result<Weight, Error> {
    let coords: Vec<i64> = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Error::Parse {
            input: s.to_string(),
            expected: "comma-separated nonnegative integers".to_string(),
        })?;
    if coords.iter().any(|&c| c < 0) {
        return Err(Error::Parse {
            input: s.to_string(),
            expected: "nonnegative fundamental coordinates".to_string(),
        });
    }
    Weight::from_ints(system, &coords)
}

fn resolve_spec(
    name: Option<&str>,
    rank: Option<usize>,
    file: Option<&PathBuf>,
) -> Result<embed::EmbeddingSpec, Error> {
    match (file, name) {
        (Some(path), _) => specfile::load_file(path),
        (None, Some(name)) => catalog::build(name, rank),
        (None, None) => Err(Error::Parse {
            input: "(no spec)".into(),
            expected: "a catalog spec name or --spec-file".into(),
        }),
    }
}

/// Splits `name[:rank]` chain entries.
fn parse_chain_entry(entry: &str) -> Result<(String, Option<usize>), Error> {
    match entry.split_once(':') {
        Some((name, rank)) => {
            let rank = rank.parse::<usize>().map_err(|_| Error::Parse {
                input: entry.to_string(),
                expected: "`name` or `name:rank`".to_string(),
            })?;
            Ok((name.to_string(), Some(rank)))
        }
        None => Ok((entry.to_string(), None)),
    }
}

fn limits_with(max_dim: Option<u64>) -> rep::Limits {
    match max_dim {
        Some(d) => rep::Limits::with_max_dim(d),
        None => rep::Limits::default(),
    }
}

fn emit(doc: &report::ReportDocument, markdown: String, format: Format) {
    match format {
        Format::Json => println!("{}", doc.to_json()),
        Format::Md => {
            print!("{}", markdown);
            for d in &doc.diagnostics {
                eprintln!("note: {}", d);
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::LieInfo {
            type_string,
            format,
        } => {
            let rs = RootSystem::build(LieType::parse(&type_string)?)?;
            let payload = report::lie_info_payload(&rs);
            let doc = report::ReportDocument::new(
                format!("lie-info {}", type_string),
                &payload,
                vec![],
            );
            emit(&doc, report::render_lie_info_markdown(&payload), format.format);
            Ok(0)
        }
        Command::Tensor {
            type_string,
            weight_a,
            weight_b,
            max_dim,
            format,
        } => {
            let rs = RootSystem::build(LieType::parse(&type_string)?)?;
            let a = parse_weight_arg(&rs, &weight_a)?;
            let b = parse_weight_arg(&rs, &weight_b)?;
            let d = rep::tensor_decompose_with(&a, &b, limits_with(max_dim))?;
            let payload = report::tensor_payload(&a, &b, &d);
            let doc = report::ReportDocument::new(
                format!("tensor {} {} {}", type_string, weight_a, weight_b),
                &payload,
                vec![],
            );
            emit(&doc, report::render_tensor_markdown(&payload), format.format);
            Ok(0)
        }
        Command::SolveLevel {
            spec,
            rank,
            spec_file,
            format,
        } => {
            let spec = resolve_spec(spec.as_deref(), rank, spec_file.as_ref())?;
            let outcome = conformal::solve_conformal_levels(&spec)?;
            let payload = report::solve_payload(&spec, &outcome);
            let doc = report::ReportDocument::new(
                format!("solve-level {}", spec.display_name()),
                &payload,
                outcome.diagnostics.clone(),
            );
            emit(&doc, report::render_solve_markdown(&payload), format.format);
            Ok(0)
        }
        Command::Verify {
            spec,
            rank,
            level,
            spec_file,
            max_dim,
            format,
        } => {
            let spec = resolve_spec(spec.as_deref(), rank, spec_file.as_ref())?;
            let k = match level {
                Some(s) => parse_level(&s)?,
                None => {
                    let outcome = conformal::solve_conformal_levels(&spec)?;
                    match outcome.solutions.len() {
                        1 => outcome.solutions[0].k.clone(),
                        0 => {
                            return Err(Error::Validation {
                                check: "conformal-level".into(),
                                detail: format!(
                                    "`{}` has no rational conformal level",
                                    spec.display_name()
                                ),
                            })
                        }
                        _ => {
                            let ks: Vec<String> = outcome
                                .solutions
                                .iter()
                                .map(|s| s.k.to_string())
                                .collect();
                            return Err(Error::AmbiguousLevel {
                                name: spec.display_name(),
                                candidates: ks.join(", "),
                            });
                        }
                    }
                }
            };
            let report_data = verify::fusion_scan_with(&spec, &k, limits_with(max_dim))?;
            let payload = report::verify_payload(&spec, &report_data);
            let doc = report::ReportDocument::new(
                format!("verify {} --level {}", spec.display_name(), k),
                &payload,
                report_data.diagnostics.clone(),
            );
            emit(&doc, report::render_verify_markdown(&payload), format.format);
            Ok(match report_data.status {
                Status::Verified | Status::VerifiedWithAnnotations => 0,
                Status::Inconclusive => 4,
            })
        }
        Command::Chain {
            specs,
            level,
            format,
        } => {
            let k = parse_level(&level)?;
            let mut resolved = Vec::new();
            for entry in &specs {
                let (name, rank) = parse_chain_entry(entry)?;
                resolved.push(catalog::build(&name, rank)?);
            }
            let chain = verify::chain_report(&resolved, &k)?;
            let payload = report::chain_payload(&chain);
            let doc = report::ReportDocument::new(
                format!("chain {} --level {}", specs.join(" "), k),
                &payload,
                chain.diagnostics.clone(),
            );
            emit(&doc, report::render_chain_markdown(&payload), format.format);
            let ok = chain.steps.iter().all(|s| {
                s.conformal
                    && match &s.verification {
                        verify::StepVerification::Scanned(r) => r.status != Status::Inconclusive,
                        verify::StepVerification::AnnotationBacked { .. } => true,
                    }
            });
            Ok(if ok { 0 } else { 4 })
        }
        Command::ReportAll {
            rank_range,
            max_dim,
            format,
        } => {
            let (lo, hi) = parse_rank_range(&rank_range)?;
            let payload = report::run_catalog_report(lo, hi, limits_with(max_dim));
            let doc = report::ReportDocument::new(
                format!("report-all --rank-range {}..{}", lo, hi),
                &payload,
                vec![],
            );
            emit(
                &doc,
                report::render_report_all_markdown(&payload),
                format.format,
            );
            Ok(0)
        }
        Command::Catalog { export_dir, format } => {
            let payload = report::catalog_list_payload();
            let mut diagnostics = Vec::new();
            if let Some(dir) = export_dir {
                for spec in catalog::catalog() {
                    let path = specfile::save_file(&spec, &dir)?;
                    diagnostics.push(format!("wrote {}", path.display()));
                }
            }
            let doc = report::ReportDocument::new("catalog", &payload, diagnostics);
            emit(&doc, report::render_catalog_markdown(&payload), format.format);
            Ok(0)
        }
    }
}

fn parse_rank_range(s: &str) -> Result<(usize, usize), Error> {
    let parts: Vec<&str> = s.split("..").collect();
    let parse = |p: &str| {
        p.trim().parse::<usize>().map_err(|_| Error::Parse {
            input: s.to_string(),
            expected: "a rank range `lo..hi`".to_string(),
        })
    };
    match parts.as_slice() {
        [one] => {
            let r = parse(one)?;
            Ok((r, r))
        }
        [lo, hi] => {
            let lo = parse(lo)?;
            let hi = parse(hi)?;
            if lo > hi {
                return Err(Error::Parse {
                    input: s.to_string(),
                    expected: "a rank range with lo <= hi".to_string(),
                });
            }
            Ok((lo, hi))
        }
        _ => Err(Error::Parse {
            input: s.to_string(),
            expected: "a rank range `lo..hi`".to_string(),
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}
