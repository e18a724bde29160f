use std::path::PathBuf;
use std::process::{Command, Output};

use softquasi::{parse_table, validate};

fn softquasi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_softquasi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("softquasi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn validate_exit_codes() {
    let ok = softquasi(&["validate", "builtin:q6"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("table / latin = true\n"));

    let bad = softquasi(&["validate", "builtin:q8-printed"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("report / status = invalid-input\n"));
    assert!(text.contains("counterexample / latin square = column 5 (header 5): symbol 4 repeated in rows 6, 8; missing 1\n"));
    assert!(text.contains("counterexample / latin square = column 8 (header 8): symbol 1 repeated in rows 6, 8; missing 4\n"));
}

#[test]
fn soft_check_reports_class() {
    let o = softquasi(&["soft", "check", "builtin:q6", "builtin:q6-soft"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("class / class = soft quasigroup\n"));
}

#[test]
fn failing_soft_check_names_parameter_and_cell() {
    let soft = scratch("bad.soft", "g1: 1 2\ng2: 2 3\n");
    let o = softquasi(&["soft", "check", "builtin:q6", soft.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(
        text.contains("counterexample / soft quasigroup = parameter g2: 2 · 2 = 1 outside {2 3}\n")
    );
    assert!(!text.contains("parameter g1"));
}

#[test]
fn metrics_fields() {
    let o = softquasi(&["soft", "metrics", "builtin:q6", "builtin:q6-soft"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in [
        "order_raw = 6",
        "am = 2",
        "gm = 6^(1/3)",
        "gm_decimal = 1.8171",
    ] {
        assert!(text.contains(&format!("metrics / {line}\n")), "{line}");
    }
    let o = softquasi(&["soft", "metrics", "builtin:q8", "builtin:q8-chain"]);
    let text = stdout(&o);
    assert!(text.contains("metrics / am = 10/3\n"));
    assert!(text.contains("metrics / gm = 32^(1/3)\n"));
}

#[test]
fn singleton_suite_passes_without_counterexamples() {
    let table = scratch("one.tbl", "e\ne\n");
    let o = softquasi(&["suite", table.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("report / status = pass\n"));
    assert!(text.contains("report / counterexamples = 0\n"));
}

#[test]
fn suite_reports_skipped_batteries() {
    let o = softquasi(&["suite", "builtin:q6", "builtin:q6-soft"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("batteries / subgroup criterion = skipped: table is not a group\n"));
    assert!(text.contains("batteries / coset battery = skipped: base is not distributive\n"));

    let o = softquasi(&["suite", "builtin:z3sq-medial", "builtin:z3sq-normal"]);
    let text = stdout(&o);
    assert!(text.contains("batteries / coset battery = pass"));
    assert!(text.contains("batteries / quotient family = pass"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["validate"],
        &["validate", "builtin:q6", "--verbose"],
        &["parastrophe", "builtin:q6", "--kind", "mul"],
        &["cosets", "builtin:q6", "builtin:q6-soft", "--side", "up"],
        &["validate", "/nonexistent/table"],
        &["soft", "check", "builtin:q6", "builtin:z3sq-normal"],
        &["quotient", "builtin:q6", "--subset", "9"],
    ] {
        let o = softquasi(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let ragged = scratch("ragged.tbl", "a b\na b\nb\n");
    let o = softquasi(&["validate", ragged.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let usage = softquasi(&["frobnicate"]);
    assert!(String::from_utf8_lossy(&usage.stderr).contains("Usage"));
}

#[test]
fn emitted_tables_parse_back() {
    let o = softquasi(&["parastrophe", "builtin:q6", "--kind", "ldiv", "--emit"]);
    assert_eq!(o.status.code(), Some(0));
    let t = parse_table(&stdout(&o)).unwrap();
    assert_eq!(t.row(2), &[3, 4, 0, 2, 1, 5]);

    let o = softquasi(&[
        "quotient",
        "builtin:z3sq-medial",
        "--subset",
        "00 10 20",
        "--emit",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("[00] [01] [02]\n"));
    let q = validate(parse_table(&text).unwrap()).unwrap();
    assert!(q.properties().is_commutative && q.properties().is_distributive());
}

#[test]
fn quotient_by_non_normal_subset_fails_with_witness() {
    let o = softquasi(&["quotient", "builtin:q6", "--subset", "1 2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample / normal subquasigroup = "));
    let o = softquasi(&["quotient", "builtin:q6", "--subset", "2 3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("counterexample / subquasigroup = 2 · 2 = 1 outside {2 3}\n"));
}

#[test]
fn iso_exit_codes() {
    assert_eq!(
        softquasi(&["iso", "builtin:z4", "builtin:z4"])
            .status
            .code(),
        Some(0)
    );
    let o = softquasi(&["iso", "builtin:z4", "builtin:z2xz2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("isomorphism / isomorphic = false\n"));
    assert_eq!(
        softquasi(&["iso", "builtin:z4", "builtin:s3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn json_mirrors_text() {
    let text = stdout(&softquasi(&[
        "cosets",
        "builtin:z3sq-medial",
        "builtin:z3sq-normal",
        "--side",
        "right",
    ]));
    let json = stdout(&softquasi(&[
        "cosets",
        "builtin:z3sq-medial",
        "builtin:z3sq-normal",
        "--side",
        "right",
        "--format",
        "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    let mut lines = vec![
        format!("report / command = {}", v["command"].as_str().unwrap()),
        format!("report / status = {}", v["status"].as_str().unwrap()),
    ];
    for s in v["sections"].as_array().unwrap() {
        for e in s["entries"].as_array().unwrap() {
            lines.push(format!(
                "{} / {} = {}",
                s["title"].as_str().unwrap(),
                e["key"].as_str().unwrap(),
                e["value"].as_str().unwrap()
            ));
        }
    }
    let cx = v["counterexamples"].as_array().unwrap();
    lines.push(format!("report / counterexamples = {}", cx.len()));
    assert!(cx.is_empty());
    assert_eq!(lines.join("\n") + "\n", text);
}
