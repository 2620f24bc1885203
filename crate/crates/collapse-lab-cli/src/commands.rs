//! One function per subcommand. Each returns `Ok(())` for exit 0 or a
//! `CliError` carrying the exit code: usage and parse problems are 2,
//! generator and analysis domain errors are 3, and a completed run whose
//! verdict is negative (failed scenario, inconsistent projection family)
//! is 1.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use collapse_lab::analysis::{
    binary_projection_imbalance, classes, imbalance, saturation_probe, ComplexityReport,
    ProjectionFamily,
};
use collapse_lab::generators::GeneratorSpec;
use collapse_lab::verify::{run_all, run_scenario, scenarios, VerificationReport};
use collapse_lab::words::{Alphabet, FiniteWord, Letter};
use serde::Serialize;

use crate::document::{DocError, ReportDocument, SpecDocument};
use crate::render::{csv, table, Format};

#[derive(Debug)]
pub enum CliError {
    /// Exit 2: bad arguments, unreadable or malformed inputs.
    Usage(String),
    /// Exit 3: the inputs parse but the computation cannot be carried out.
    Domain(String),
    /// Exit 1: the run completed and the answer is "no".
    Failed(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Failed(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(text) | CliError::Domain(text) | CliError::Failed(text) => text,
        }
    }
}

impl From<DocError> for CliError {
    fn from(error: DocError) -> Self {
        CliError::Usage(error.to_string())
    }
}

impl From<collapse_lab::generators::Error> for CliError {
    fn from(error: collapse_lab::generators::Error) -> Self {
        CliError::Domain(error.to_string())
    }
}

impl From<collapse_lab::analysis::Error> for CliError {
    fn from(error: collapse_lab::analysis::Error) -> Self {
        match error {
            collapse_lab::analysis::Error::InconsistentFamily { .. } => {
                CliError::Failed(error.to_string())
            }
            collapse_lab::analysis::Error::AlphabetTooSmall => CliError::Usage(error.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<collapse_lab::words::Error> for CliError {
    fn from(error: collapse_lab::words::Error) -> Self {
        CliError::Domain(error.to_string())
    }
}

impl From<collapse_lab::verify::Error> for CliError {
    fn from(error: collapse_lab::verify::Error) -> Self {
        match error {
            collapse_lab::verify::Error::UnknownScenario { .. } => {
                CliError::Usage(error.to_string())
            }
            other => CliError::Domain(other.to_string()),
        }
    }
}

fn load_spec(path: &Path) -> Result<(SpecDocument, GeneratorSpec), CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let document = SpecDocument::parse(&text)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let spec = document
        .to_generator()
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok((document, spec))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), CliError> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display()))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize infallibly")
}

pub fn generate(
    spec_path: &Path,
    length: usize,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let (_, spec) = load_spec(spec_path)?;
    let word = spec.prefix(length)?;
    emit(output, &word.to_string())
}

#[allow(clippy::too_many_arguments)]
pub fn complexity(
    spec_path: &Path,
    length: usize,
    saturate: bool,
    n_max: usize,
    orders: &[usize],
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let started = Instant::now();
    let (document, spec) = load_spec(spec_path)?;
    let mut orders: Vec<usize> = orders.to_vec();
    if orders.is_empty() {
        orders.push(2);
    }
    orders.sort_unstable();
    orders.dedup();

    let (used_length, saturated) = if saturate {
        let initial = length.max(n_max);
        let probe = saturation_probe(&spec, n_max, initial, initial.saturating_mul(64))?;
        (probe.length, Some(probe.stable))
    } else {
        (length, None)
    };
    let prefix = spec.prefix(used_length)?;
    let report = ComplexityReport::compute(&prefix, &orders, n_max, true)?;

    let text = match format {
        Format::Json => to_json(&ReportDocument::new(
            document,
            used_length,
            saturated,
            started.elapsed().as_millis() as u64,
            &report,
        )),
        Format::Table | Format::Csv => {
            let mut rows = Vec::new();
            let mut header = vec!["n".to_string(), "p".to_string(), "rho".to_string()];
            header.extend(orders.iter().map(|k| format!("b{k}")));
            rows.push(header);
            for row in &report.rows {
                let mut cells = vec![
                    row.n.to_string(),
                    row.factors.to_string(),
                    row.abelian.to_string(),
                ];
                cells.extend(row.binomial.iter().map(u64::to_string));
                rows.push(cells);
            }
            if format == Format::Csv {
                csv(&rows)
            } else {
                let mut text = table(&rows);
                if report.collisions.is_empty() {
                    text.push_str("collisions: none\n");
                } else {
                    for hit in &report.collisions {
                        text.push_str(&format!(
                            "collision: order {} at n = {}: {} ~ {}\n",
                            hit.order, hit.n, hit.left, hit.right
                        ));
                    }
                }
                let state = match saturated {
                    None => "not probed".to_string(),
                    Some(flag) => flag.to_string(),
                };
                text.push_str(&format!(
                    "prefix length {used_length}; saturated: {state}\n"
                ));
                text
            }
        }
    };
    emit(output, &text)
}

#[derive(Serialize)]
struct ProjectionBalance {
    pair: String,
    report: collapse_lab::analysis::BalanceReport,
}

pub fn balance(
    spec_path: &Path,
    length: usize,
    n_max: usize,
    projections: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let started = Instant::now();
    let (document, spec) = load_spec(spec_path)?;
    let prefix = spec.prefix(length)?;

    let text = if projections {
        let alphabet = prefix.alphabet().clone();
        let reports: Vec<ProjectionBalance> = binary_projection_imbalance(&prefix, n_max)?
            .into_iter()
            .map(|((a, b), report)| ProjectionBalance {
                pair: format!("{}{}", alphabet.glyph(a), alphabet.glyph(b)),
                report,
            })
            .collect();
        match format {
            Format::Json => to_json(&ReportDocument::new(
                document,
                length,
                None,
                started.elapsed().as_millis() as u64,
                &reports,
            )),
            Format::Table | Format::Csv => {
                let mut rows = vec![vec![
                    "pair".to_string(),
                    "projected_length".to_string(),
                    "overall_c".to_string(),
                ]];
                for entry in &reports {
                    rows.push(vec![
                        entry.pair.clone(),
                        entry.report.prefix_length.to_string(),
                        entry.report.overall_c.to_string(),
                    ]);
                }
                if format == Format::Csv {
                    csv(&rows)
                } else {
                    table(&rows)
                }
            }
        }
    } else {
        let report = imbalance(&prefix, n_max)?;
        match format {
            Format::Json => to_json(&ReportDocument::new(
                document,
                length,
                None,
                started.elapsed().as_millis() as u64,
                &report,
            )),
            Format::Table | Format::Csv => {
                let mut header = vec!["n".to_string()];
                header.extend(report.letters.iter().cloned());
                let mut rows = vec![header];
                for n in 1..=report.n_max {
                    let mut cells = vec![n.to_string()];
                    cells.extend(
                        report
                            .imbalance
                            .iter()
                            .map(|per_letter| per_letter[n - 1].to_string()),
                    );
                    rows.push(cells);
                }
                if format == Format::Csv {
                    csv(&rows)
                } else {
                    let mut text = table(&rows);
                    text.push_str(&format!("overall imbalance: {}\n", report.overall_c));
                    text
                }
            }
        }
    };
    emit(output, &text)
}

#[derive(Serialize)]
struct ClassesDocument {
    n: usize,
    order: usize,
    class_count: usize,
    groups: Vec<Vec<String>>,
}

pub fn class_partition(
    spec_path: &Path,
    length: usize,
    k: usize,
    n: usize,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let started = Instant::now();
    let (document, spec) = load_spec(spec_path)?;
    let prefix = spec.prefix(length)?;
    let partition = classes(&prefix, k, n)?;
    let groups: Vec<Vec<String>> = partition
        .groups()
        .iter()
        .map(|group| group.iter().map(FiniteWord::to_string).collect())
        .collect();

    let text = match format {
        Format::Json => to_json(&ReportDocument::new(
            document,
            length,
            None,
            started.elapsed().as_millis() as u64,
            &ClassesDocument {
                n: partition.n(),
                order: partition.order(),
                class_count: partition.class_count(),
                groups,
            },
        )),
        Format::Table | Format::Csv => {
            let mut rows = vec![vec!["class".to_string(), "members".to_string()]];
            for (index, group) in groups.iter().enumerate() {
                rows.push(vec![(index + 1).to_string(), group.join(" ")]);
            }
            if format == Format::Csv {
                csv(&rows)
            } else {
                let mut text = table(&rows);
                text.push_str(&format!(
                    "{} classes of {} factors (length {}, order {})\n",
                    partition.class_count(),
                    groups.iter().map(Vec::len).sum::<usize>(),
                    partition.n(),
                    partition.order()
                ));
                text
            }
        }
    };
    emit(output, &text)
}

fn parse_letters(alphabet: &Alphabet, text: &str) -> Result<Vec<Letter>, CliError> {
    let glyphs: Vec<String> = if alphabet.single_char() {
        text.chars().map(String::from).collect()
    } else {
        text.split(',').map(str::to_string).collect()
    };
    glyphs
        .iter()
        .map(|glyph| {
            alphabet
                .letter_of_glyph(glyph)
                .map_err(|e| CliError::Usage(e.to_string()))
        })
        .collect()
}

/// The projection combinator: `length` counts letters of the projected
/// word, not of the base.
pub fn project(
    spec_path: &Path,
    length: usize,
    letters: &str,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let (_, spec) = load_spec(spec_path)?;
    let keep = parse_letters(&spec.alphabet()?, letters)?;
    let projected = GeneratorSpec::Projected {
        base: Box::new(spec),
        keep,
    };
    let word = projected.prefix(length)?;
    emit(output, &word.to_string())
}

pub fn color(
    spec_path: &Path,
    letter: &str,
    colors_path: &Path,
    length: usize,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let (_, base) = load_spec(spec_path)?;
    let (_, colors) = load_spec(colors_path)?;
    let letter = base
        .alphabet()?
        .letter_of_glyph(letter)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let colored = GeneratorSpec::Colored {
        base: Box::new(base),
        letter,
        colors: Box::new(colors),
    };
    let word = colored.prefix(length)?;
    emit(output, &word.to_string())
}

/// Each projection file holds one line, `PAIR WORD` (`WORD` may be absent
/// for an empty projection), e.g. `ab aabaa`.
pub fn reconstruct(
    alphabet: &str,
    files: &[PathBuf],
    output: Option<&Path>,
) -> Result<(), CliError> {
    let alphabet = Alphabet::from_glyphs(alphabet)
        .map_err(|e| CliError::Usage(format!("bad alphabet: {e}")))?;
    let mut entries = Vec::new();
    for path in files {
        let content = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let mut tokens = content.split_whitespace();
        let pair = tokens.next().ok_or_else(|| {
            CliError::Usage(format!("{}: expected \"PAIR WORD\"", path.display()))
        })?;
        let word_text = tokens.next().unwrap_or("");
        if tokens.next().is_some() {
            return Err(CliError::Usage(format!(
                "{}: expected a single \"PAIR WORD\" entry",
                path.display()
            )));
        }
        let glyphs: Vec<char> = pair.chars().collect();
        if glyphs.len() != 2 {
            return Err(CliError::Usage(format!(
                "{}: \"{pair}\" is not a two-glyph pair",
                path.display()
            )));
        }
        let first = alphabet
            .letter_of_glyph(&glyphs[0].to_string())
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let second = alphabet
            .letter_of_glyph(&glyphs[1].to_string())
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let pair_alphabet = Alphabet::from_glyphs(pair)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let word = FiniteWord::from_glyphs(&pair_alphabet, word_text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        entries.push(((first, second), word));
    }
    let family = ProjectionFamily::new(alphabet, entries)?;
    let word = family.reconstruct()?;
    emit(output, &word.to_string())
}

fn verification_rows(reports: &[VerificationReport]) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "scenario".to_string(),
        "check".to_string(),
        "passed".to_string(),
        "detail".to_string(),
    ]];
    for report in reports {
        for check in &report.checks {
            rows.push(vec![
                report.scenario.clone(),
                check.label.clone(),
                check.passed.to_string(),
                check.detail.clone(),
            ]);
        }
    }
    rows
}

fn verification_text(reports: &[VerificationReport]) -> String {
    let mut text = String::new();
    for report in reports {
        text.push_str(&format!(
            "{}: {} (prefix length {}, {} ms)\n",
            report.scenario,
            if report.passed { "PASS" } else { "FAIL" },
            report.prefix_length,
            report.wall_time_ms
        ));
        for check in &report.checks {
            text.push_str(&format!(
                "  [{}] {} :: {}\n",
                if check.passed { "ok" } else { "FAIL" },
                check.label,
                check.detail
            ));
        }
    }
    text
}

pub fn verify(
    scenario_names: &[String],
    all: bool,
    include_long: bool,
    list: bool,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    if list {
        let registry = scenarios();
        let text = match format {
            Format::Json => to_json(&registry),
            Format::Table | Format::Csv => {
                let mut rows = vec![vec![
                    "name".to_string(),
                    "kind".to_string(),
                    "summary".to_string(),
                ]];
                for info in registry {
                    rows.push(vec![
                        info.name.to_string(),
                        format!("{:?}", info.kind).to_lowercase(),
                        info.summary.to_string(),
                    ]);
                }
                if format == Format::Csv {
                    csv(&rows)
                } else {
                    table(&rows)
                }
            }
        };
        return emit(output, &text);
    }

    let reports: Vec<VerificationReport> = if all {
        run_all(include_long)?
    } else {
        if scenario_names.is_empty() {
            return Err(CliError::Usage(
                "choose --scenario NAME, --all, or --list".to_string(),
            ));
        }
        scenario_names
            .iter()
            .map(|name| run_scenario(name))
            .collect::<Result<_, _>>()?
    };

    let text = match format {
        Format::Json => to_json(&reports),
        Format::Csv => csv(&verification_rows(&reports)),
        Format::Table => verification_text(&reports),
    };
    emit(output, &text)?;

    let failed: Vec<&str> = reports
        .iter()
        .filter(|report| !report.passed)
        .map(|report| report.scenario.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "failed scenarios: {}",
            failed.join(", ")
        )))
    }
}
