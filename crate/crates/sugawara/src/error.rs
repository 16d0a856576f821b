use thiserror::Error;

/// Errors produced by the library.
///
/// Variants are grouped by the exit-code contract of the CLI: usage/parse
/// problems, unknown catalog names, and unsupported spec shapes are kept
/// distinct so callers can map them faithfully.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: requires {requirement}")]
    InvalidRank {
        family: char,
        rank: usize,
        requirement: &'static str,
    },

    #[error("cannot parse `{input}` as a Lie type (expected family letter + rank, e.g. `G2`, `D5`)")]
    ParseLieType { input: String },

    #[error("cannot parse `{input}` as {expected}")]
    Parse { input: String, expected: String },

    #[error("weights belong to different root systems ({left} vs {right})")]
    SystemMismatch { left: String, right: String },

    #[error("weight {weight} is not dominant integral")]
    NonDominant { weight: String },

    #[error("weight {weight} is not integral")]
    NonIntegralWeight { weight: String },

    #[error("dimension {dim} exceeds the configured guard {guard}")]
    DimensionGuard { dim: String, guard: u64 },

    #[error("level {level} is critical for {algebra} (h-check = {h_dual})")]
    CriticalLevel {
        algebra: String,
        level: String,
        h_dual: u64,
    },

    #[error("evaluation hits a pole: {description}")]
    Pole { description: String },

    #[error("embedding spec `{name}` has no branching components")]
    EmptySpec { name: String },

    #[error("validation failed in check `{check}`: {detail}")]
    Validation { check: String, detail: String },

    #[error("unknown spec `{name}`")]
    UnknownSpec { name: String },

    #[error("spec family `{name}` requires a rank argument ({hint})")]
    RankRequired { name: String, hint: String },

    #[error("rank {rank} outside supported range for `{name}` ({hint})")]
    RankOutOfRange {
        name: String,
        rank: usize,
        hint: String,
    },

    #[error("unsupported configuration: {reason}")]
    UnsupportedConfiguration { reason: String },

    #[error("level is ambiguous for `{name}`: candidates {candidates}; pass --level")]
    AmbiguousLevel { name: String, candidates: String },

    #[error("chain does not compose: {detail}")]
    NonComposableChain { detail: String },

    #[error("spec file error: {detail}")]
    SpecFile { detail: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
