//! Exact-arithmetic toolkit for conformal embeddings of affine vertex
//! operator algebras.
//!
//! Given a simple Lie algebra `g` and a reductive subalgebra `g0` with
//! declared branching data, the crate solves for the rational levels `k` at
//! which the subalgebra's Sugawara Virasoro vector agrees with the ambient
//! one, checks the central-charge identity, decomposes tensor products of
//! branching components, and classifies the resulting summands by
//! conformal-weight integrality.  Everything is computed over arbitrary-
//! precision rationals; there is no floating point anywhere in the core.
//!
//! Module map:
//!
//! * [`lie`] - root systems, invariant forms, Weyl chamber walks.
//! * [`rep`] - weight multiplicities, tensor products, Dynkin indices.
//! * [`embed`] - embedding specs, validation, the built-in catalog.
//! * [`conformal`] - central charges, conformal weights, the level solver.
//! * [`verify`] - the semisimplicity scan and chain reports.
//! * [`report`] - machine-readable report documents shared with the CLI.
//!
//! With the default `parallel` feature the data-parallel inner loops
//! (tensor-product accumulation, multiplicity levels, pair scans, catalog
//! sweeps) run on rayon; disabling it yields a fully sequential build with
//! identical results.

pub mod catalog;
pub mod conformal;
pub mod embed;
mod error;
pub mod exec;
pub mod lie;
pub mod rep;
pub mod report;
pub mod specfile;
pub mod verify;

pub use error::{Error, Result};
pub use lie::{LieFamily, LieType, RootSystem, Weight};
pub use rep::{Decomposition, Limits, WeightSystem};
