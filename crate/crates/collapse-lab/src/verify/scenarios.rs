//! The scenario registry: every verification this crate knows how to run,
//! addressable by a stable name.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::checks;
use super::corpus;
use super::report::{CheckOutcome, SweepReport, VerificationReport};
use super::sweeps;
use super::Error;

/// How a scenario is meant to be scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScenarioKind {
    /// Runs in seconds; included in a full run.
    Standard,
    /// Minutes-long exhaustive sweep; included in a full run only on
    /// request.
    Long,
    /// Bundles other scenarios; runnable by name but excluded from a full
    /// run, which already covers its members.
    Aggregate,
}

/// A registry row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScenarioInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub kind: ScenarioKind,
}

const REGISTRY: &[ScenarioInfo] = &[
    ScenarioInfo {
        name: "sturmian-collapse",
        summary: "golden binary word: order-2 classes separate all factors up to n = 50",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "tribonacci-collapse",
        summary: "ternary directive word: order-2 classes separate all factors up to n = 99",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "thue-morse-collision",
        summary: "swap-doubling fixed point: the order-2 collision (0110, 1001) at n = 4 is found",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "witness-catalog",
        summary: "recorded witness pairs re-verify against freshly generated prefixes",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "abelian-saturation",
        summary: "head-then-constant words have equal abelian and factor counts; the golden word does not",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "balanced-ternary-coloring",
        summary: "colored mechanical word stays 1-balanced with order-2 separation",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "quasi-sturmian-d3",
        summary: "three-letter block image: complexity n + 2 and order-2 separation",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "quasi-sturmian-d4",
        summary: "four-letter block image: complexity n + 3 and order-2 separation",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "quasi-sturmian-negative-control",
        summary: "square block images collide at order 2, so the block condition is load-bearing",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "billiard-d2",
        summary: "plane grid coding: balance, projections and order-2 separation",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "billiard-d3",
        summary: "space grid coding: balance, projections and order-2 separation",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "billiard-d4",
        summary: "four-dimensional grid coding: balance, projections and order-2 separation",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "billiard-degenerate",
        summary: "simultaneous wall crossings are refused with a diagnostic",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "coloring-fibonacci",
        summary: "doubled-letter coloring of the golden word: opening, balance and order-2 separation",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "thue-morse-iterate-k3",
        summary: "one swap-doubling round: order-3 separates, order-2 already collides",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "thue-morse-iterate-k4",
        summary: "two swap-doubling rounds: order-4 separates, order-3 already collides",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "arnoux-rauzy-sweep-p3",
        summary: "order-2 separation for every palindromic directive of period <= 3",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "cassaigne-selmer-sweep-p2",
        summary: "order-2 separation for every ternary-directive word of period <= 2",
        kind: ScenarioKind::Standard,
    },
    ScenarioInfo {
        name: "arnoux-rauzy-sweep-p5",
        summary: "order-2 separation for every palindromic directive of period <= 5",
        kind: ScenarioKind::Long,
    },
    ScenarioInfo {
        name: "cassaigne-selmer-sweep-p5",
        summary: "order-2 separation for every ternary-directive word of period <= 5",
        kind: ScenarioKind::Long,
    },
    ScenarioInfo {
        name: "family-representatives",
        summary: "one gated report per colored, block-image and grid-coding family member",
        kind: ScenarioKind::Aggregate,
    },
];

/// Every registered scenario, in registry order.
pub fn scenarios() -> &'static [ScenarioInfo] {
    REGISTRY
}

/// Flattens a sweep into one report: a lead row with the directive count,
/// then one row per entry. `partial` surfaces as a failing lead row so a
/// budget-truncated sweep can never read as a pass.
fn sweep_to_report(name: &str, sweep: SweepReport, started: Instant) -> VerificationReport {
    let mut checks = vec![CheckOutcome::new(
        format!("{}: all {} directives covered", sweep.name, sweep.directive_count),
        !sweep.partial && sweep.entries.len() == sweep.directive_count,
        if sweep.partial {
            format!(
                "budget exhausted after {} of {} directives",
                sweep.entries.len(),
                sweep.directive_count
            )
        } else {
            format!("{} directive words analyzed", sweep.entries.len())
        },
    )];
    for entry in &sweep.entries {
        let detail = if entry.report.passed {
            format!(
                "{} checks passed at prefix length {}",
                entry.report.checks.len(),
                entry.report.prefix_length
            )
        } else {
            let failed: Vec<&str> = entry
                .report
                .checks
                .iter()
                .filter(|check| !check.passed)
                .map(|check| check.label.as_str())
                .collect();
            let mark = if entry.suspect { "suspect generator; " } else { "" };
            format!("{mark}failed: {}", failed.join("; "))
        };
        checks.push(CheckOutcome::new(
            format!("directive {}", entry.directive),
            entry.report.passed,
            detail,
        ));
    }
    let prefix_length = sweep
        .entries
        .first()
        .map(|entry| entry.report.prefix_length)
        .unwrap_or(0);
    VerificationReport::from_checks(name, prefix_length, checks, started)
}

/// Collapses the per-family reports into one row each.
fn family_aggregate(name: &str) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let members = checks::check_family_representatives()?;
    let prefix_length = members
        .iter()
        .map(|member| member.prefix_length)
        .max()
        .unwrap_or(0);
    let rows = members
        .iter()
        .map(|member| {
            let detail = if member.passed {
                format!(
                    "{} checks passed at prefix length {}",
                    member.checks.len(),
                    member.prefix_length
                )
            } else {
                let failed: Vec<&str> = member
                    .checks
                    .iter()
                    .filter(|check| !check.passed)
                    .map(|check| check.label.as_str())
                    .collect();
                format!("failed: {}", failed.join("; "))
            };
            CheckOutcome::new(member.scenario.clone(), member.passed, detail)
        })
        .collect();
    Ok(VerificationReport::from_checks(
        name,
        prefix_length,
        rows,
        started,
    ))
}

/// Two reference words whose abelian classes separate all factors, plus the
/// golden word as a control that diverges immediately.
fn abelian_saturation(name: &str) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let n_max = 30;
    let len = 2_000;
    let mut checks = Vec::new();
    let saturating = [
        ("two ones then constant twos", corpus::double_head_constant_tail()),
        ("ascending head then constant threes", corpus::ascending_head_constant_tail()),
    ];
    for (label, spec) in &saturating {
        let divergence = checks::rho_equals_p_divergence(spec, n_max, len)?;
        checks.push(CheckOutcome::new(
            format!("abelian classes separate all factors of {label}"),
            divergence.is_none(),
            match divergence {
                None => format!("counts agree up to n = {n_max}"),
                Some(n) => format!("first divergence at n = {n}"),
            },
        ));
    }
    let control = checks::rho_equals_p_divergence(&corpus::fibonacci(), n_max, len)?;
    checks.push(CheckOutcome::new(
        "golden word control diverges first at n = 2",
        control == Some(2),
        format!("first divergence: {control:?}"),
    ));
    Ok(VerificationReport::from_checks(name, len, checks, started))
}

/// Runs one scenario by registry name.
pub fn run_scenario(name: &str) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    match name {
        "sturmian-collapse" => checks::check_collapse(name, &corpus::fibonacci(), 2, 50, 10_000),
        "tribonacci-collapse" => {
            checks::check_collapse(name, &corpus::tribonacci(), 2, 99, 20_000)
        }
        "thue-morse-collision" => checks::check_expected_collision(
            name,
            &corpus::thue_morse(),
            2,
            4,
            4_096,
            (4, "0110", "1001"),
        ),
        "witness-catalog" => checks::check_witness_catalog(name),
        "abelian-saturation" => abelian_saturation(name),
        "balanced-ternary-coloring" => checks::check_balanced_ternary(name),
        "quasi-sturmian-d3" => checks::check_quasi_sturmian(name, 3),
        "quasi-sturmian-d4" => checks::check_quasi_sturmian(name, 4),
        "quasi-sturmian-negative-control" => checks::check_expected_collision(
            name,
            &corpus::square_control(),
            2,
            4,
            4_096,
            (4, "1221", "2112"),
        ),
        "billiard-d2" => checks::check_billiard(name, 2),
        "billiard-d3" => checks::check_billiard(name, 3),
        "billiard-d4" => checks::check_billiard(name, 4),
        "billiard-degenerate" => checks::check_billiard_degenerate(name),
        "coloring-fibonacci" => checks::check_coloring_fibonacci(name),
        "thue-morse-iterate-k3" => checks::check_thue_morse_iterate(name, 1, 3, 30),
        "thue-morse-iterate-k4" => checks::check_thue_morse_iterate(name, 2, 4, 20),
        "arnoux-rauzy-sweep-p3" => Ok(sweep_to_report(
            name,
            sweeps::sweep_arnoux_rauzy(3, 2, 99, 20_000, None)?,
            started,
        )),
        "cassaigne-selmer-sweep-p2" => Ok(sweep_to_report(
            name,
            sweeps::sweep_cassaigne_selmer(2, 2, 99, 10_000, None)?,
            started,
        )),
        "arnoux-rauzy-sweep-p5" => Ok(sweep_to_report(
            name,
            sweeps::sweep_arnoux_rauzy(5, 2, 99, 20_000, None)?,
            started,
        )),
        "cassaigne-selmer-sweep-p5" => Ok(sweep_to_report(
            name,
            sweeps::sweep_cassaigne_selmer(5, 2, 99, 10_000, None)?,
            started,
        )),
        "family-representatives" => family_aggregate(name),
        _ => Err(Error::UnknownScenario {
            name: name.to_string(),
        }),
    }
}

/// Runs every standard scenario (and the long sweeps when asked), in
/// parallel, returning reports in registry order. The aggregate scenario is
/// skipped: its members are already present individually.
pub fn run_all(include_long: bool) -> Result<Vec<VerificationReport>, Error> {
    let names: Vec<&'static str> = REGISTRY
        .iter()
        .filter(|info| match info.kind {
            ScenarioKind::Standard => true,
            ScenarioKind::Long => include_long,
            ScenarioKind::Aggregate => false,
        })
        .map(|info| info.name)
        .collect();
    names.par_iter().map(|name| run_scenario(name)).collect()
}
