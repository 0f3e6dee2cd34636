//! Black-box tests of the `centro` binary: exit codes, output shapes, and
//! byte-for-byte reproducibility against the frozen golden renderings.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn centro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn stats_with_inline_cells_prints_one_line() {
    let output = centro(&["stats", "--cells", "56,24,13,20"]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "chi2=9.204 p<0.01\n");
}

#[test]
fn degenerate_cells_fail_with_exit_1_and_no_output() {
    let output = centro(&["stats", "--cells", "0,0,3,4"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(output.stdout.is_empty());
    assert!(!output.stderr.is_empty());
}

#[test]
fn validate_clean_fixture_is_silent_success() {
    let output = centro(&["validate", &path("minimal.json")]);
    assert!(output.status.success());
    assert!(output.stdout.is_empty());
}

#[test]
fn validate_reports_violations_and_exits_1() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bad = dir.join("two_subjects.json");
    std::fs::write(
        &bad,
        serde_json::json!({
            "doc_id": "bad",
            "entities": [{
                "id": "a", "animate": true, "gender": "fem", "number": "sg",
                "person": 3, "is_set": false, "members": [], "deictic": false,
            }],
            "sentences": [{"id": "s1", "clauses": [{
                "id": "c1", "kind": "main", "attach_to": null, "order": 0,
                "other_construction": false,
                "verbal_complex": {"tensed": true, "agr_gender": "unspec", "agr_number": "unspec"},
                "mentions": [
                    {"id": "m1", "entity": "a", "form": "name", "role": "subject",
                     "surface_pos": 0, "empathy": false, "qis_or_arb": false,
                     "clitic_position": null, "possessor": null, "constrained": false},
                    {"id": "m2", "entity": "a", "form": "null", "role": "subject",
                     "surface_pos": 1, "empathy": false, "qis_or_arb": false,
                     "clitic_position": null, "possessor": null, "constrained": false},
                ],
            }]}],
        })
        .to_string(),
    )
    .unwrap();
    let output = centro(&["validate", bad.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    let report = String::from_utf8(output.stderr).unwrap();
    assert!(report.contains("c1"), "{report}");
}

#[test]
fn unreadable_file_exits_2() {
    let output = centro(&["validate", "no_such_file.json"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(output.stdout.is_empty());
}

#[test]
fn analyze_single_document_emits_plain_json_lines() {
    let output = centro(&["analyze", &path("ex9.json")]);
    assert!(output.status.success());
    let lines: Vec<String> = stdout(&output).lines().map(String::from).collect();
    assert_eq!(lines.len(), 6);
    assert!(lines.iter().all(|l| l.starts_with('{')), "no header lines");
    let transitions: Vec<String> = lines
        .iter()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            v["transition"].as_str().unwrap().to_string()
        })
        .collect();
    assert_eq!(
        transitions[1..],
        ["CONTINUE", "RETAIN", "CONTINUE", "RETAIN", "CONTINUE"]
    );
    for idx in [3, 5] {
        let v: serde_json::Value = serde_json::from_str(&lines[idx]).unwrap();
        assert_eq!(v["bigram"], "RET_CONT", "line {idx}");
    }
}

#[test]
fn analyze_multiple_documents_separates_streams_with_headers() {
    let output = centro(&["analyze", &path("ex9.json"), &path("minimal.json")]);
    assert!(output.status.success());
    let text = stdout(&output);
    let headers: Vec<&str> = text.lines().filter(|l| l.starts_with("# ")).collect();
    assert_eq!(headers, ["# ex9", "# minimal"]);
}

#[test]
fn audit_reports_the_informative_strong_pronoun() {
    let output = centro(&["audit", &path("ex19.json")]);
    assert!(output.status.success());
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["mention"], "m5");
    assert_eq!(v["predicted"], "null");
    assert_eq!(v["actual"], "strong");
}

#[test]
fn tables_match_the_frozen_goldens() {
    for (format, golden) in [
        ("tsv", "golden_tables.tsv"),
        ("text", "golden_tables.txt"),
        ("json", "golden_tables.json"),
    ] {
        let output = centro(&[
            "tables",
            "--format",
            format,
            "--labeled",
            &path("labels.json"),
        ]);
        assert!(output.status.success());
        let expected = std::fs::read(fixture(golden)).unwrap();
        assert_eq!(output.stdout, expected, "{format}");
    }
}

#[test]
fn stats_from_labels_prints_the_five_derived_tables() {
    let output = centro(&["stats", "--labeled", &path("labels.json")]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "continue-vs-others: chi2=9.204 p<0.01\n\
         cont-cont+shift-cont-vs-ret-cont: chi2=10.910 p<0.001\n\
         cont-cont+shift-cont-vs-all-others: chi2=16.922 p<0.001\n\
         ret-cont-vs-non-continue: chi2=0.292 p<0.7\n\
         cont-cont+shift-cont-vs-cent-est: chi2=10.624 p<0.01\n"
    );
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = [
        "analyze",
        &path("synthetic/synthetic_0.json"),
        &path("synthetic/synthetic_1.json"),
    ];
    let first = centro(&args);
    let second = centro(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn output_flag_writes_the_file_instead_of_stdout() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let target = dir.join("states.jsonl");
    let output = centro(&[
        "analyze",
        &path("minimal.json"),
        "--output",
        target.to_str().unwrap(),
    ]);
    assert!(output.status.success());
    assert!(output.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    assert_eq!(written.lines().count(), 2);
}

#[test]
fn split_complements_changes_the_unit_count() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let doc = dir.join("complement.json");
    std::fs::write(
        &doc,
        serde_json::json!({
            "doc_id": "comp",
            "entities": [
                {"id": "a", "animate": true, "gender": "fem", "number": "sg",
                 "person": 3, "is_set": false, "members": [], "deictic": false},
                {"id": "b", "animate": true, "gender": "masc", "number": "sg",
                 "person": 3, "is_set": false, "members": [], "deictic": false},
            ],
            "sentences": [{"id": "s1", "clauses": [
                {"id": "c1", "kind": "main", "attach_to": null, "order": 0,
                 "other_construction": false,
                 "verbal_complex": {"tensed": true, "agr_gender": "unspec", "agr_number": "unspec"},
                 "mentions": [{"id": "m1", "entity": "a", "form": "name", "role": "subject",
                               "surface_pos": 0, "empathy": false, "qis_or_arb": false,
                               "clitic_position": null, "possessor": null, "constrained": false}]},
                {"id": "c2", "kind": "complement", "attach_to": "c1", "order": 1,
                 "other_construction": false,
                 "verbal_complex": {"tensed": true, "agr_gender": "unspec", "agr_number": "unspec"},
                 "mentions": [{"id": "m2", "entity": "b", "form": "name", "role": "subject",
                               "surface_pos": 0, "empathy": false, "qis_or_arb": false,
                               "clitic_position": null, "possessor": null, "constrained": false}]},
            ]}],
        })
        .to_string(),
    )
    .unwrap();
    let merged = centro(&["analyze", doc.to_str().unwrap()]);
    let split = centro(&["analyze", doc.to_str().unwrap(), "--split-complements"]);
    assert_eq!(stdout(&merged).lines().count(), 1);
    assert_eq!(stdout(&split).lines().count(), 2);
}
