//! The individual verification procedures behind the named scenarios.
//!
//! Each check generates its evidence from scratch (no cached state), so a
//! failing report can always be reproduced by rerunning the same function.
//! Checks that quote a witness pair re-verify the pair against the freshly
//! generated prefix instead of trusting the recorded values.

use std::time::Instant;

use crate::analysis::{
    abelian_complexity, binary_projection_imbalance, find_collisions, imbalance, saturation_probe,
    subword_complexity,
};
use crate::generators::{self, billiard_prefix, GeneratorSpec};
use crate::words::{k_binomial_equivalent, FiniteWord, Letter};

use super::corpus;
use super::report::{CheckOutcome, VerificationReport};
use super::Error;

/// Base prefix length for the projection witness catalog.
const WITNESS_BASE_LEN: usize = 300_000;
/// Projections of the base are truncated to this length before searching.
const WITNESS_PROJECTED_LEN: usize = 100_000;

fn render_collisions(hits: &[(usize, FiniteWord, FiniteWord)]) -> String {
    if hits.is_empty() {
        return "none".to_string();
    }
    let shown: Vec<String> = hits
        .iter()
        .take(3)
        .map(|(n, u, v)| format!("n = {n}: {u} ~ {v}"))
        .collect();
    let mut text = shown.join("; ");
    if hits.len() > 3 {
        text.push_str(&format!("; {} more", hits.len() - 3));
    }
    text
}

/// Saturation probe outcome as a check. When `gate` is false the outcome is
/// recorded but never fails the report; use that for words whose factor sets
/// are known to keep growing past any practical prefix.
fn saturation_outcome(
    spec: &GeneratorSpec,
    n_max: usize,
    len: usize,
    gate: bool,
) -> Result<CheckOutcome, Error> {
    let probe = saturation_probe(spec, n_max, len, len * 2)?;
    let detail = if probe.stable {
        format!(
            "no new factor of length <= {n_max} between prefix lengths {len} and {}",
            probe.length
        )
    } else {
        format!(
            "factors of length <= {n_max} still appearing at prefix length {}; class counts are lower bounds",
            probe.length
        )
    };
    Ok(if gate {
        CheckOutcome::new("factor saturation", probe.stable, detail)
    } else {
        CheckOutcome::informational("factor saturation (not gated)", detail)
    })
}

/// No two distinct length-`n` factors share an order-`k` signature, for any
/// `n ≤ n_max`. A failure quotes the earliest offending pair.
fn collision_outcome(prefix: &FiniteWord, k: usize, n_max: usize) -> Result<CheckOutcome, Error> {
    let hits = find_collisions(prefix, k, n_max)?;
    let label = format!("order-{k} classes separate all factors up to n = {n_max}");
    Ok(match hits.first() {
        None => CheckOutcome::new(label, true, format!("no collision in {n_max} window lengths")),
        Some(_) => CheckOutcome::new(label, false, render_collisions(&hits)),
    })
}

/// Saturation gate plus a collision scan, shared by the collapse scenarios
/// and the directive sweeps.
pub(super) fn collapse_suite(
    scenario: &str,
    spec: &GeneratorSpec,
    k: usize,
    n_max: usize,
    len: usize,
    gate_saturation: bool,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let prefix = spec.prefix(len)?;
    let checks = vec![
        saturation_outcome(spec, n_max, len, gate_saturation)?,
        collision_outcome(&prefix, k, n_max)?,
    ];
    Ok(VerificationReport::from_checks(scenario, len, checks, started))
}

/// The order-`k` class count equals the factor count at every window length
/// up to `n_max`, on the length-`len` prefix of `spec`.
pub fn check_collapse(
    scenario: &str,
    spec: &GeneratorSpec,
    k: usize,
    n_max: usize,
    len: usize,
) -> Result<VerificationReport, Error> {
    collapse_suite(scenario, spec, k, n_max, len, true)
}

/// The collision scan on `spec` finds exactly the expected pair: the quoted
/// `(n, left, right)` is reported, the pair re-checks as order-`k`
/// equivalent, and both factors occur in the prefix.
pub fn check_expected_collision(
    scenario: &str,
    spec: &GeneratorSpec,
    k: usize,
    n_max: usize,
    len: usize,
    expected: (usize, &str, &str),
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let prefix = spec.prefix(len)?;
    let hits = find_collisions(&prefix, k, n_max)?;
    let (n, left, right) = expected;
    let found = hits
        .iter()
        .any(|(m, u, v)| *m == n && u.to_string() == left && v.to_string() == right);
    let mut checks = vec![CheckOutcome::new(
        format!("order-{k} collision ({left}, {right}) at n = {n}"),
        found,
        if found {
            format!("reported among {} collision(s)", hits.len())
        } else {
            format!("not reported; scan found: {}", render_collisions(&hits))
        },
    )];
    if found {
        let u = FiniteWord::from_glyphs(prefix.alphabet(), left)?;
        let v = FiniteWord::from_glyphs(prefix.alphabet(), right)?;
        let equivalent = k_binomial_equivalent(&u, &v, k)?;
        let occur = prefix.factor_count(&u)? > 0 && prefix.factor_count(&v)? > 0;
        checks.push(CheckOutcome::new(
            "witness re-check",
            equivalent && occur,
            format!("order-{k} equivalent: {equivalent}; both occur as factors: {occur}"),
        ));
    }
    Ok(VerificationReport::from_checks(scenario, len, checks, started))
}

/// First window length where the abelian class count falls below the factor
/// count, if any, on the length-`len` prefix.
pub fn rho_equals_p_divergence(
    spec: &GeneratorSpec,
    n_max: usize,
    len: usize,
) -> Result<Option<usize>, Error> {
    let prefix = spec.prefix(len)?;
    let factors = subword_complexity(&prefix, n_max)?;
    let abelian = abelian_complexity(&prefix, n_max)?;
    Ok((1..=n_max).find(|&n| abelian[n - 1] < factors[n - 1]))
}

/// Abelian classes separate all factors of `spec` up to `n_max`.
pub fn check_rho_equals_p(
    scenario: &str,
    spec: &GeneratorSpec,
    n_max: usize,
    len: usize,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let saturation = saturation_outcome(spec, n_max, len, true)?;
    let divergence = rho_equals_p_divergence(spec, n_max, len)?;
    let outcome = match divergence {
        None => CheckOutcome::new(
            format!("abelian classes separate all factors up to n = {n_max}"),
            true,
            "abelian and factor counts agree at every window length".to_string(),
        ),
        Some(n) => CheckOutcome::new(
            format!("abelian classes separate all factors up to n = {n_max}"),
            false,
            format!("abelian count falls below the factor count first at n = {n}"),
        ),
    };
    Ok(VerificationReport::from_checks(
        scenario,
        len,
        vec![saturation, outcome],
        started,
    ))
}

/// What a recorded witness pair is supposed to demonstrate.
enum WitnessProperty {
    /// The two factors' counts of `glyph` differ by exactly `difference`,
    /// exhibiting that much imbalance in the host word.
    CountGap {
        glyph: &'static str,
        difference: u64,
    },
    /// The two factors are order-`order` equivalent, so they merge classes
    /// at their length.
    Equivalent { order: usize },
}

fn witness_outcome(
    host: &FiniteWord,
    host_name: &str,
    left: &str,
    right: &str,
    property: &WitnessProperty,
) -> Result<CheckOutcome, Error> {
    let u = FiniteWord::from_glyphs(host.alphabet(), left)?;
    let v = FiniteWord::from_glyphs(host.alphabet(), right)?;
    let left_occurs = host.factor_count(&u)? > 0;
    let right_occurs = host.factor_count(&v)? > 0;
    let (claim, holds) = match property {
        WitnessProperty::CountGap { glyph, difference } => {
            let letter = host.alphabet().letter_of_glyph(glyph)?;
            let gap = u.letter_count(letter)?.abs_diff(v.letter_count(letter)?);
            (
                format!("counts of {glyph} differ by {difference} (measured {gap})"),
                gap == *difference,
            )
        }
        WitnessProperty::Equivalent { order } => {
            let equivalent = k_binomial_equivalent(&u, &v, *order)?;
            (
                format!("order-{order} equivalent (measured {equivalent})"),
                equivalent,
            )
        }
    };
    Ok(CheckOutcome::new(
        format!("{left} / {right} in {host_name}"),
        left_occurs && right_occurs && holds,
        format!("occur as factors: {left_occurs}/{right_occurs}; {claim}"),
    ))
}

/// Re-derives the recorded witness pairs: three pairs exhibiting imbalance 2
/// in binary projections of the ternary directive word, the matching three
/// order-2 equivalent pairs in the same projections, and the two order-2
/// equivalent pairs in the swap-doubling word and the square-image control.
pub fn check_witness_catalog(scenario: &str) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let base = corpus::tribonacci().prefix(WITNESS_BASE_LEN)?;
    let mut checks = Vec::new();

    let projected_pairs: [(u8, u8, &str, &str, WitnessProperty); 6] = [
        (
            0,
            1,
            "11211211211211",
            "21211211211212",
            WitnessProperty::CountGap {
                glyph: "2",
                difference: 2,
            },
        ),
        (
            0,
            2,
            "1111",
            "3113",
            WitnessProperty::CountGap {
                glyph: "3",
                difference: 2,
            },
        ),
        (
            1,
            2,
            "22322322322322",
            "32322322322323",
            WitnessProperty::CountGap {
                glyph: "3",
                difference: 2,
            },
        ),
        (
            0,
            1,
            "2112112112112112",
            "1212112112112121",
            WitnessProperty::Equivalent { order: 2 },
        ),
        (
            0,
            2,
            "311113",
            "131131",
            WitnessProperty::Equivalent { order: 2 },
        ),
        (
            1,
            2,
            "3223223223223223",
            "2323223223223232",
            WitnessProperty::Equivalent { order: 2 },
        ),
    ];
    for (a, b, left, right, property) in &projected_pairs {
        let projected = base
            .project_pair(Letter::new(*a), Letter::new(*b))?
            .prefix(WITNESS_PROJECTED_LEN);
        let host_name = format!(
            "projection {}{}",
            base.alphabet().glyph(Letter::new(*a)),
            base.alphabet().glyph(Letter::new(*b))
        );
        checks.push(witness_outcome(&projected, &host_name, left, right, property)?);
    }

    let tm = corpus::thue_morse().prefix(4096)?;
    checks.push(witness_outcome(
        &tm,
        "the swap-doubling fixed point",
        "0110",
        "1001",
        &WitnessProperty::Equivalent { order: 2 },
    )?);
    let control = corpus::square_control().prefix(4096)?;
    checks.push(witness_outcome(
        &control,
        "the square-image control word",
        "1221",
        "2112",
        &WitnessProperty::Equivalent { order: 2 },
    )?);

    Ok(VerificationReport::from_checks(
        scenario,
        WITNESS_BASE_LEN,
        checks,
        started,
    ))
}

/// The mechanical word colored by alternating tail letters stays 1-balanced
/// and its order-2 classes separate all factors.
pub fn check_balanced_ternary(scenario: &str) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let spec = corpus::balanced_ternary();
    let len = 20_000;
    let prefix = spec.prefix(len)?;
    let balance = imbalance(&prefix, 60)?;
    let checks = vec![
        CheckOutcome::new(
            "1-balanced up to window 60",
            balance.overall_c == 1,
            format!("overall imbalance {}", balance.overall_c),
        ),
        saturation_outcome(&spec, 40, len, true)?,
        collision_outcome(&prefix, 2, 40)?,
    ];
    Ok(VerificationReport::from_checks(scenario, len, checks, started))
}

/// The block image of the binary word has factor complexity `n + (d - 1)`
/// over its `d`-letter alphabet, and order-2 classes separate all factors.
pub fn check_quasi_sturmian(scenario: &str, d: usize) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let spec = corpus::quasi_sturmian(d);
    let len = 6_000;
    let n_max = 40;
    let prefix = spec.prefix(len)?;
    let factors = subword_complexity(&prefix, n_max)?;
    let offset = d - 1;
    let shape = (1..=n_max).find(|&n| factors[n - 1] != (n + offset) as u64);
    let checks = vec![
        CheckOutcome::new(
            format!("factor complexity n + {offset} up to n = {n_max}"),
            shape.is_none(),
            match shape {
                None => "matches at every window length".to_string(),
                Some(n) => format!("p({n}) = {} instead of {}", factors[n - 1], n + offset),
            },
        ),
        saturation_outcome(&spec, n_max, len, true)?,
        collision_outcome(&prefix, 2, n_max)?,
    ];
    Ok(VerificationReport::from_checks(scenario, len, checks, started))
}

/// Hypergrid coding in dimension `dim`: every binary projection is
/// 1-balanced, projections coincide with directly constructed
/// lower-dimensional codings, and order-2 classes separate all factors.
/// Saturation is recorded but not gated: with this many letters the factor
/// sets keep growing well past any prefix worth generating.
pub fn check_billiard(scenario: &str, dim: usize) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let spec = corpus::billiard(dim);
    let len = 10_000;
    let prefix = spec.prefix(len)?;
    let mut checks = Vec::new();

    let balance = binary_projection_imbalance(&prefix, 200)?;
    let worst = balance.values().map(|r| r.overall_c).max().unwrap_or(0);
    checks.push(CheckOutcome::new(
        "all binary projections 1-balanced up to window 200",
        worst == 1,
        format!("largest projection imbalance {worst}"),
    ));

    if dim > 2 {
        let (start, momentum) = match &spec {
            GeneratorSpec::Billiard { start, momentum } => (start.clone(), momentum.clone()),
            _ => unreachable!("corpus::billiard builds a hypergrid spec"),
        };
        let mut mismatch = None;
        for i in 0..dim {
            for j in (i + 1)..dim {
                let projected = prefix.project_pair(Letter::new(i as u8), Letter::new(j as u8))?;
                let direct = billiard_prefix(
                    &[start[i].clone(), start[j].clone()],
                    &[momentum[i].clone(), momentum[j].clone()],
                    projected.len(),
                )?;
                let agree = projected
                    .letters()
                    .iter()
                    .map(|l| l.id())
                    .eq(direct.letters().iter().map(|l| l.id()));
                if !agree && mismatch.is_none() {
                    mismatch = Some((i, j));
                }
            }
        }
        checks.push(CheckOutcome::new(
            "projections equal the two-coordinate codings",
            mismatch.is_none(),
            match mismatch {
                None => format!("all {} coordinate pairs agree", dim * (dim - 1) / 2),
                Some((i, j)) => format!("coordinates ({i}, {j}) disagree"),
            },
        ));
    }

    checks.push(saturation_outcome(&spec, 60, len, false)?);
    checks.push(collision_outcome(&prefix, 2, 60)?);
    Ok(VerificationReport::from_checks(scenario, len, checks, started))
}

/// A start position crossing two hypergrid walls at the same instant is
/// refused with a diagnostic naming both coordinates and the crossing time.
pub fn check_billiard_degenerate(scenario: &str) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let spec = corpus::billiard_degenerate();
    let label = "simultaneous wall crossing is diagnosed";
    let outcome = match spec.prefix(8) {
        Err(generators::Error::DegenerateTrajectory {
            first,
            second,
            time,
        }) => CheckOutcome::new(
            label,
            first == 1 && second == 2 && time == "1",
            format!("coordinates {first} and {second} cross at t = {time}"),
        ),
        Err(other) => CheckOutcome::new(label, false, format!("unexpected error: {other}")),
        Ok(word) => CheckOutcome::new(label, false, format!("produced a word: {word}")),
    };
    Ok(VerificationReport::from_checks(
        scenario,
        0,
        vec![outcome],
        started,
    ))
}

/// The doubled-letter coloring of the golden mechanical word opens as
/// expected, its order-2 classes separate all factors, and its measured
/// binary projection balance is recorded. The balance row is informational:
/// the collapse check is the gate, and the projection structure is already
/// pinned down by the class separation.
pub fn check_coloring_fibonacci(scenario: &str) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let spec = corpus::coloring_fibonacci();
    let len = 10_000;
    let prefix = spec.prefix(len)?;
    let expected_head = "0100201001002";
    let head = prefix.prefix(expected_head.len()).to_string();
    let mut checks = vec![CheckOutcome::new(
        "13-letter opening",
        head == expected_head,
        format!("read {head}, expected {expected_head}"),
    )];

    let balance = binary_projection_imbalance(&prefix, 40)?;
    let summary: Vec<String> = balance
        .iter()
        .map(|((a, b), report)| {
            format!(
                "{}{}: {}",
                prefix.alphabet().glyph(*a),
                prefix.alphabet().glyph(*b),
                report.overall_c
            )
        })
        .collect();
    checks.push(CheckOutcome::informational(
        "measured projection imbalance up to window 40",
        summary.join(", "),
    ));

    checks.push(saturation_outcome(&spec, 40, len, true)?);
    checks.push(collision_outcome(&prefix, 2, 40)?);
    Ok(VerificationReport::from_checks(scenario, len, checks, started))
}

/// After `iterations` rounds of swap-doubling applied to the golden binary
/// word, order-`order` classes separate all factors while order-`order - 1`
/// classes already merge some pair. With zero iterations only the
/// separation half applies.
pub fn check_thue_morse_iterate(
    scenario: &str,
    iterations: u32,
    order: usize,
    n_max: usize,
) -> Result<VerificationReport, Error> {
    let started = Instant::now();
    let spec = GeneratorSpec::ThueMorseIterated {
        base: Box::new(corpus::fibonacci()),
        iterations,
    };
    let len = 8_192;
    let prefix = spec.prefix(len)?;
    let mut checks = vec![collision_outcome(&prefix, order, n_max)?];
    if iterations >= 1 {
        let lower = order - 1;
        let hits = find_collisions(&prefix, lower, n_max)?;
        checks.push(CheckOutcome::new(
            format!("an order-{lower} collision exists up to n = {n_max}"),
            !hits.is_empty(),
            match hits.first() {
                Some((n, u, v)) => format!("first at n = {n}: {u} ~ {v}"),
                None => "none found".to_string(),
            },
        ));
    }
    Ok(VerificationReport::from_checks(scenario, len, checks, started))
}

/// One report per member of the colored, block-image and hypergrid
/// families, each gated on its own complexity, balance and collapse checks.
pub fn check_family_representatives() -> Result<Vec<VerificationReport>, Error> {
    Ok(vec![
        check_balanced_ternary("balanced-ternary-coloring")?,
        check_quasi_sturmian("quasi-sturmian-d3", 3)?,
        check_quasi_sturmian("quasi-sturmian-d4", 4)?,
        check_billiard("billiard-d2", 2)?,
        check_billiard("billiard-d3", 3)?,
        check_billiard("billiard-d4", 4)?,
        check_coloring_fibonacci("coloring-fibonacci")?,
    ])
}
