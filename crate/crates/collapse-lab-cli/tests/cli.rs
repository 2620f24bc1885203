//! End-to-end runs of the installed binary: each test spawns the real
//! executable, feeds it spec documents from `specs/` or a scratch
//! directory, and checks stdout, stderr and the exit code.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> Run {
    let mut command = Command::new(env!("CARGO_BIN_EXE_collapse-lab"));
    command.args(args);
    for (key, value) in env {
        command.env(key, value);
    }
    let output = command.output().expect("the binary runs");
    Run {
        code: output.status.code().expect("no signal deaths"),
        stdout: String::from_utf8(output.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(output.stderr).expect("utf-8 stderr"),
    }
}

fn collapse_lab(args: &[&str]) -> Run {
    run_with_env(args, &[])
}

fn spec_path(name: &str) -> String {
    format!("{}/../../specs/{}", env!("CARGO_MANIFEST_DIR"), name)
}

#[test]
fn writes_the_golden_prefix() {
    let run = collapse_lab(&["generate", "--spec", &spec_path("fibonacci.spec"), "--length", "19"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "0100101001001010010\n");
}

#[test]
fn periodic_prefix_from_a_scratch_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("alternating.spec");
    fs::write(
        &path,
        r#"{"kind": "eventually-periodic", "alphabet": "01", "preperiod": "", "period": "01"}"#,
    )
    .unwrap();
    let run = collapse_lab(&["generate", "--spec", path.to_str().unwrap(), "--length", "4"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "0101\n");
}

#[test]
fn degenerate_trajectory_exits_with_a_domain_error() {
    let run = collapse_lab(&[
        "generate",
        "--spec",
        &spec_path("billiard-degenerate.spec"),
        "--length",
        "8",
    ]);
    assert_eq!(run.code, 3);
    assert!(run.stdout.is_empty());
    assert!(
        run.stderr
            .contains("coordinates 1 and 2 cross simultaneously at t = 1"),
        "stderr: {}",
        run.stderr
    );
}

#[test]
fn fibonacci_complexity_table_is_sturmian() {
    let run = collapse_lab(&[
        "complexity",
        "--spec",
        &spec_path("fibonacci.spec"),
        "--nmax",
        "8",
        "--format",
        "csv",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert_eq!(lines[0], "n,p,rho,b2");
    assert_eq!(lines.len(), 9);
    for line in &lines[1..] {
        let cells: Vec<usize> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let n = cells[0];
        assert_eq!(cells[1], n + 1, "p({n})");
        assert_eq!(cells[2], 2, "rho({n})");
        assert_eq!(cells[3], n + 1, "b2({n})");
    }
}

#[test]
fn thue_morse_collision_appears_in_the_table() {
    let run = collapse_lab(&[
        "complexity",
        "--spec",
        &spec_path("thue-morse.spec"),
        "--nmax",
        "4",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(
        run.stdout
            .contains("collision: order 2 at n = 4: 0110 ~ 1001"),
        "stdout: {}",
        run.stdout
    );
    assert!(run.stdout.contains("saturated: not probed"));
}

#[test]
fn saturation_probe_grows_the_prefix() {
    let run = collapse_lab(&[
        "complexity",
        "--spec",
        &spec_path("fibonacci.spec"),
        "--length",
        "64",
        "--nmax",
        "8",
        "--saturate",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(
        run.stdout.contains("prefix length 128; saturated: true"),
        "stdout: {}",
        run.stdout
    );
}

#[test]
fn balance_reports_the_periodic_imbalance() {
    let run = collapse_lab(&[
        "balance",
        "--spec",
        &spec_path("periodic-11122.spec"),
        "--nmax",
        "5",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(
        run.stdout.trim_end().ends_with("overall imbalance: 2"),
        "stdout: {}",
        run.stdout
    );
}

fn projection_imbalances(stdout: &str) -> Vec<(String, usize)> {
    stdout
        .lines()
        .skip(1)
        .map(|line| {
            let cells: Vec<&str> = line.split_whitespace().collect();
            (cells[0].to_string(), cells[2].parse().unwrap())
        })
        .collect()
}

#[test]
fn projection_balance_singles_out_the_heavy_pair() {
    let run = collapse_lab(&[
        "balance",
        "--spec",
        &spec_path("tribonacci.spec"),
        "--projections",
        "--nmax",
        "10",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let rows = projection_imbalances(&run.stdout);
    assert_eq!(
        rows,
        vec![
            ("12".to_string(), 1),
            ("13".to_string(), 2),
            ("23".to_string(), 1),
        ]
    );
}

#[test]
fn billiard_projections_stay_balanced() {
    let run = collapse_lab(&[
        "balance",
        "--spec",
        &spec_path("billiard-d3.spec"),
        "--projections",
        "--length",
        "2000",
        "--nmax",
        "10",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let rows = projection_imbalances(&run.stdout);
    assert_eq!(rows.len(), 3);
    for (pair, c) in rows {
        assert_eq!(c, 1, "projection {pair}");
    }
}

#[test]
fn class_partition_lists_the_groups() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("five.spec");
    fs::write(
        &path,
        r#"{"kind": "eventually-periodic", "alphabet": "12", "preperiod": "", "period": "11212"}"#,
    )
    .unwrap();
    let run = collapse_lab(&[
        "classes",
        "--spec",
        path.to_str().unwrap(),
        "--length",
        "5",
        "--k",
        "1",
        "--n",
        "2",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.contains("12 21"), "stdout: {}", run.stdout);
    assert!(
        run.stdout
            .contains("2 classes of 3 factors (length 2, order 1)"),
        "stdout: {}",
        run.stdout
    );
}

#[test]
fn projection_matches_filtered_generation() {
    let projected = collapse_lab(&[
        "project",
        "--spec",
        &spec_path("tribonacci.spec"),
        "--length",
        "40",
        "--letters",
        "13",
    ]);
    assert_eq!(projected.code, 0, "stderr: {}", projected.stderr);

    let full = collapse_lab(&[
        "generate",
        "--spec",
        &spec_path("tribonacci.spec"),
        "--length",
        "200",
    ]);
    let filtered: String = full
        .stdout
        .trim_end()
        .chars()
        .filter(|&c| c != '2')
        .take(40)
        .collect();
    assert_eq!(projected.stdout.trim_end(), filtered);
}

#[test]
fn coloring_by_letter_matches_the_combinator_spec() {
    let colored = collapse_lab(&[
        "color",
        "--spec",
        &spec_path("fibonacci-0a.spec"),
        "--letter",
        "a",
        "--colors",
        &spec_path("fibonacci-12.spec"),
        "--length",
        "13",
    ]);
    assert_eq!(colored.code, 0, "stderr: {}", colored.stderr);
    assert_eq!(colored.stdout, "0100201001002\n");

    let combinator = collapse_lab(&[
        "generate",
        "--spec",
        &spec_path("coloring-fibonacci.spec"),
        "--length",
        "13",
    ]);
    assert_eq!(combinator.stdout, colored.stdout);
}

#[test]
fn reconstructs_a_word_from_its_projections() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<PathBuf> = [("ab", "aabaa"), ("ac", "aaaca"), ("bc", "bc")]
        .iter()
        .map(|(pair, word)| {
            let path = dir.path().join(format!("{pair}.txt"));
            fs::write(&path, format!("{pair} {word}")).unwrap();
            path
        })
        .collect();
    let run = collapse_lab(&[
        "reconstruct",
        "--alphabet",
        "abc",
        files[0].to_str().unwrap(),
        files[1].to_str().unwrap(),
        files[2].to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert_eq!(run.stdout, "aabaca\n");
}

#[test]
fn inconsistent_projections_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let files: Vec<PathBuf> = [("ab", "aabaa"), ("ac", "aaaca"), ("bc", "cb")]
        .iter()
        .map(|(pair, word)| {
            let path = dir.path().join(format!("{pair}.txt"));
            fs::write(&path, format!("{pair} {word}")).unwrap();
            path
        })
        .collect();
    let run = collapse_lab(&[
        "reconstruct",
        "--alphabet",
        "abc",
        files[0].to_str().unwrap(),
        files[1].to_str().unwrap(),
        files[2].to_str().unwrap(),
    ]);
    assert_eq!(run.code, 1);
    assert!(
        run.stderr.contains("inconsistent projection family"),
        "stderr: {}",
        run.stderr
    );
}

#[test]
fn verify_scenario_passes_and_prints_checks() {
    let run = collapse_lab(&["verify", "--scenario", "thue-morse-collision"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(
        run.stdout.contains("thue-morse-collision: PASS"),
        "stdout: {}",
        run.stdout
    );
    assert!(
        run.stdout
            .contains("[ok] order-2 collision (0110, 1001) at n = 4"),
        "stdout: {}",
        run.stdout
    );
}

#[test]
fn verify_rejects_unknown_scenarios() {
    let run = collapse_lab(&["verify", "--scenario", "no-such"]);
    assert_eq!(run.code, 2);
    assert!(
        run.stderr.contains("unknown scenario: no-such"),
        "stderr: {}",
        run.stderr
    );
}

#[test]
fn verify_requires_a_selection() {
    let run = collapse_lab(&["verify"]);
    assert_eq!(run.code, 2);
    assert!(
        run.stderr
            .contains("choose --scenario NAME, --all, or --list"),
        "stderr: {}",
        run.stderr
    );
}

#[test]
fn verify_list_covers_the_registry() {
    let run = collapse_lab(&["verify", "--list"]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    for name in [
        "sturmian-collapse",
        "witness-catalog",
        "billiard-degenerate",
        "arnoux-rauzy-sweep-p5",
        "family-representatives",
    ] {
        assert!(run.stdout.contains(name), "missing {name}: {}", run.stdout);
    }
    assert!(run.stdout.contains("long"));
    assert!(run.stdout.contains("aggregate"));
}

#[test]
fn verify_json_reports_pass() {
    let run = collapse_lab(&[
        "verify",
        "--scenario",
        "sturmian-collapse",
        "--format",
        "json",
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let reports: serde_json::Value = serde_json::from_str(&run.stdout).unwrap();
    let report = &reports.as_array().unwrap()[0];
    assert_eq!(report["scenario"], "sturmian-collapse");
    assert_eq!(report["passed"], true);
}

#[test]
fn json_envelope_is_reproducible() {
    let args = [
        "complexity",
        "--spec",
        &spec_path("fibonacci.spec"),
        "--nmax",
        "3",
        "--format",
        "json",
    ];
    let mut documents: Vec<serde_json::Value> = [collapse_lab(&args), collapse_lab(&args)]
        .iter()
        .map(|run| {
            assert_eq!(run.code, 0, "stderr: {}", run.stderr);
            serde_json::from_str(&run.stdout).unwrap()
        })
        .collect();
    for document in &mut documents {
        assert_eq!(document["tool"], "collapse-lab");
        assert_eq!(document["version"], env!("CARGO_PKG_VERSION"));
        let hash = document["spec_sha256"].as_str().unwrap();
        assert_eq!(hash.len(), 64);
        assert!(hash.chars().all(|c| c.is_ascii_hexdigit()));
        assert_eq!(document["spec"]["kind"], "morphic");
        assert_eq!(document["report"]["rows"].as_array().unwrap().len(), 3);
        document["elapsed_ms"] = serde_json::Value::Null;
    }
    assert_eq!(documents[0], documents[1]);
}

#[test]
fn thread_cap_is_honored_and_validated() {
    let ok = run_with_env(
        &[
            "complexity",
            "--spec",
            &spec_path("fibonacci.spec"),
            "--nmax",
            "3",
            "--format",
            "csv",
        ],
        &[("COLLAPSE_LAB_THREADS", "1")],
    );
    assert_eq!(ok.code, 0, "stderr: {}", ok.stderr);

    let zero = run_with_env(&["verify", "--list"], &[("COLLAPSE_LAB_THREADS", "0")]);
    assert_eq!(zero.code, 2);
    assert!(
        zero.stderr.contains("COLLAPSE_LAB_THREADS"),
        "stderr: {}",
        zero.stderr
    );
}

#[test]
fn malformed_documents_exit_with_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.spec");
    fs::write(&path, "{\"kind\": \"morphic\"").unwrap();
    let broken = collapse_lab(&["generate", "--spec", path.to_str().unwrap(), "--length", "5"]);
    assert_eq!(broken.code, 2);
    assert!(
        broken.stderr.contains("broken.spec"),
        "stderr: {}",
        broken.stderr
    );

    let missing_path = dir.path().join("absent.spec");
    let missing = collapse_lab(&[
        "generate",
        "--spec",
        missing_path.to_str().unwrap(),
        "--length",
        "5",
    ]);
    assert_eq!(missing.code, 2);
    assert!(
        missing.stderr.contains("cannot read"),
        "stderr: {}",
        missing.stderr
    );
}

#[test]
fn output_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prefix.txt");
    let run = collapse_lab(&[
        "generate",
        "--spec",
        &spec_path("fibonacci.spec"),
        "--length",
        "19",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    assert!(run.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), "0100101001001010010\n");
}

#[test]
fn every_example_spec_parses_and_builds() {
    use collapse_lab::verify;
    use collapse_lab_cli::document::SpecDocument;

    let dir = PathBuf::from(spec_path(""));
    let mut seen = 0;
    for entry in fs::read_dir(&dir).expect("specs directory exists") {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("spec") {
            continue;
        }
        seen += 1;
        let text = fs::read_to_string(&path).unwrap();
        let document =
            SpecDocument::parse(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        document
            .to_generator()
            .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    }
    assert!(seen >= 19, "expected the full example set, found {seen}");

    let matches_corpus = [
        ("fibonacci.spec", verify::fibonacci()),
        ("thue-morse.spec", verify::thue_morse()),
        ("tribonacci.spec", verify::tribonacci()),
        ("fibonacci-0a.spec", verify::fibonacci_0a()),
        ("fibonacci-12.spec", verify::fibonacci_12()),
        ("coloring-fibonacci.spec", verify::coloring_fibonacci()),
        ("balanced-ternary.spec", verify::balanced_ternary()),
        ("quasi-sturmian-d3.spec", verify::quasi_sturmian(3)),
        ("square-control.spec", verify::square_control()),
        ("billiard-d2.spec", verify::billiard(2)),
        ("billiard-d3.spec", verify::billiard(3)),
        ("billiard-degenerate.spec", verify::billiard_degenerate()),
    ];
    for (name, expected) in matches_corpus {
        let text = fs::read_to_string(spec_path(name)).unwrap();
        let built = SpecDocument::parse(&text).unwrap().to_generator().unwrap();
        assert_eq!(built, expected, "{name} drifted from the built-in corpus");
    }
}
