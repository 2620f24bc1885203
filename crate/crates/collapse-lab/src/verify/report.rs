use serde::Serialize;
use std::time::Instant;

/// One named assertion inside a scenario, with a human-readable detail line.
/// A failing outcome always carries the measured value or counterwitness in
/// `detail` so it can be re-checked independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(label: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            label: label.into(),
            passed,
            detail: detail.into(),
        }
    }

    /// An always-passing outcome that records a measurement without gating
    /// the scenario on it.
    pub fn informational(label: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckOutcome::new(label, true, detail)
    }
}

/// The result of one named scenario. Apart from `wall_time_ms`, the content
/// is deterministic: identical inputs produce identical reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub scenario: String,
    pub passed: bool,
    pub prefix_length: usize,
    pub wall_time_ms: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    /// Assembles a report; `passed` is the conjunction of its checks.
    pub fn from_checks(
        scenario: impl Into<String>,
        prefix_length: usize,
        checks: Vec<CheckOutcome>,
        started: Instant,
    ) -> Self {
        VerificationReport {
            scenario: scenario.into(),
            passed: checks.iter().all(|c| c.passed),
            prefix_length,
            wall_time_ms: started.elapsed().as_millis() as u64,
            checks,
        }
    }

    /// A copy with the timing field zeroed, for determinism comparisons.
    pub fn without_timing(&self) -> Self {
        let mut copy = self.clone();
        copy.wall_time_ms = 0;
        copy
    }
}

/// One directive inside a sweep. `suspect` marks a failure of the
/// generator sanity gate rather than a genuine collision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub directive: String,
    pub suspect: bool,
    pub report: VerificationReport,
}

/// Aggregate over all directives of a sweep. For a completed sweep
/// (`partial == false`) `passed` equals the conjunction of the member
/// results; a sweep cut short by its budget never counts as a pass.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub name: String,
    pub directive_count: usize,
    pub partial: bool,
    pub passed: bool,
    pub entries: Vec<SweepEntry>,
}
