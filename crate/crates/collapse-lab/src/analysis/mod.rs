//! Complexity, balance, and reconstruction analyses over finite prefixes.
//!
//! Every quantity reported here is exact for the analyzed prefix and a
//! lower bound for the infinite word it was cut from; reports carry the
//! prefix length used so downstream consumers can judge the evidence.

mod balance;
mod complexity;
mod projections;
mod saturation;

#[cfg(test)]
mod tests;

pub use balance::{binary_projection_imbalance, imbalance, BalanceReport};
pub use complexity::{
    abelian_complexity, classes, find_collisions, k_binomial_complexity, subword_complexity,
    ClassPartition, Collision, ComplexityReport, ComplexityRow,
};
pub use projections::{reconstruct, ProjectionFamily};
pub use saturation::{saturation_probe, SaturationOutcome};

use crate::{generators, words};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] words::Error),
    #[error(transparent)]
    Generator(#[from] generators::Error),
    #[error("analysis window {n_max} exceeds the prefix length {prefix_length}")]
    WindowTooLong { n_max: usize, prefix_length: usize },
    #[error("probe must start at least at the window length ({initial_length} < {n_max})")]
    ProbeTooShort { initial_length: usize, n_max: usize },
    #[error("an alphabet of at least two letters is required")]
    AlphabetTooSmall,
    #[error("inconsistent projection family: {reason}")]
    InconsistentFamily { reason: String },
}
