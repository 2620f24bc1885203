//! Named, deterministic verification scenarios for the word families the
//! tool was built around.
//!
//! A scenario regenerates its words from fixed parameters, runs a list of
//! checks, and returns a [`VerificationReport`] whose rows carry enough
//! detail to re-derive any failure by hand. Reports are deterministic
//! except for their wall-clock field; see
//! [`VerificationReport::without_timing`]. Scenario parameters (prefix
//! lengths, window bounds) were sized so that each gated saturation probe
//! actually stabilizes; checks on words whose factor sets outgrow any
//! practical prefix record saturation informationally instead of gating on
//! it.

mod checks;
mod corpus;
mod report;
mod scenarios;
mod sweeps;


pub use checks::{
    check_balanced_ternary, check_billiard, check_billiard_degenerate, check_collapse,
    check_coloring_fibonacci, check_expected_collision, check_family_representatives,
    check_quasi_sturmian, check_rho_equals_p, check_thue_morse_iterate, check_witness_catalog,
    rho_equals_p_divergence,
};
pub use corpus::{
    ascending_head_constant_tail, balanced_ternary, billiard, billiard_degenerate,
    coloring_fibonacci, double_head_constant_tail, fibonacci, fibonacci_0a, fibonacci_12,
    quasi_sturmian, square_control, thue_morse, tribonacci,
};
pub use report::{CheckOutcome, SweepEntry, SweepReport, VerificationReport};
pub use scenarios::{run_all, run_scenario, scenarios, ScenarioInfo, ScenarioKind};
pub use sweeps::{sweep_arnoux_rauzy, sweep_cassaigne_selmer};

use crate::{analysis, generators, words};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Word(#[from] words::Error),
    #[error(transparent)]
    Generator(#[from] generators::Error),
    #[error(transparent)]
    Analysis(#[from] analysis::Error),
    #[error("unknown scenario: {name}")]
    UnknownScenario { name: String },
}
