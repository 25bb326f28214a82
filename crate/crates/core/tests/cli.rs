use pperm::cli::{run, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn pperm(args: &[&str]) -> pperm::cli::Outcome {
    run(std::iter::once("pperm").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = pperm(args);
    assert_eq!(out.code, EXIT_OK, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid json")
}

#[test]
fn volume_is_an_exact_string() {
    let v = json(&["volume", "--m", "2", "--n", "3"]);
    // 2n^2 - 1 at n = 3
    assert_eq!(v["value"], "17");
}

#[test]
fn all_volume_methods_agree_for_p33() {
    let v = json(&["volume", "--m", "3", "--n", "3", "--all-methods"]);
    assert_eq!(v["agree"], true);
    for entry in v["results"].as_array().unwrap() {
        assert_eq!(entry["value"], "129");
    }
}

#[test]
fn ehrhart_csv_has_a_header_and_one_row() {
    let out = pperm(&[
        "ehrhart",
        "--m",
        "2",
        "--n",
        "2",
        "--method",
        "interpolate",
        "--format",
        "csv",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("method,polynomial"));
    assert!(lines[1].contains("7/2*t^2 + 7/2*t + 1"));
}

#[test]
fn fvector_tex_is_a_tabular() {
    let out = pperm(&["fvector", "--m", "3", "--n", "3", "--format", "tex"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.starts_with("\\begin{tabular}"));
    assert!(out.stdout.contains("$24$"));
}

#[test]
fn vertex_listing_counts_match() {
    let v = json(&["vertices", "--m", "3", "--n", "2"]);
    // origin, 2 in one of 3 slots, (2, 1) in an ordered pair of slots
    assert_eq!(v["count"], 1 + 3 + 3 * 2);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 10);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(pperm(&["bogus"]).code, EXIT_USAGE);
    assert_eq!(pperm(&["volume", "--m", "2"]).code, EXIT_USAGE);
    let out = pperm(&["volume", "--m", "2", "--n", "3", "--method", "parking"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("n = m - 1"));
    assert_eq!(
        pperm(&[
            "volume",
            "--m",
            "2",
            "--n",
            "3",
            "--method",
            "oracle",
            "--all-methods"
        ])
        .code,
        EXIT_USAGE
    );
}

#[test]
fn help_exits_zero() {
    assert_eq!(pperm(&["--help"]).code, EXIT_OK);
}

#[test]
fn output_is_deterministic_across_worker_counts() {
    let a = pperm(&[
        "ehrhart",
        "--m",
        "3",
        "--n",
        "3",
        "--method",
        "interpolate",
        "--parallel",
        "1",
    ]);
    let b = pperm(&[
        "ehrhart",
        "--m",
        "3",
        "--n",
        "3",
        "--method",
        "interpolate",
        "--parallel",
        "3",
    ]);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn small_verify_suite_passes() {
    let out = pperm(&[
        "verify", "--suite", "engines", "--max-m", "2", "--max-n", "3",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
}

#[test]
fn tables_label_provenance() {
    let v = json(&["table", "--which", "draconian"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[3]["ehrhart_sequences"], 455);
    assert_eq!(rows[3]["provenance"], "golden-verified");
}
