//! End-to-end tests driving the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_majorana"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn verify_single_entry_passes() {
    let out = run(&["verify", "cz"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("cz"));
    assert!(text.contains("PASS"));
    assert!(text.contains("1 clean"));
}

#[test]
fn verify_quoted_phase_defect_exits_one() {
    let out = run(&["verify", "y"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("phase flag"));
    // fidelity is still perfect; only the printed prefactor is off
    assert!(text.contains("fidelity=1.000000000000"));
}

#[test]
fn verify_all_reports_exactly_three_flags() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("reports.json");
    let out = run(&["verify", "--all", "--json", json_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("3 phase-flagged, 0 failed"));

    let reports: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    let arr = reports.as_array().unwrap();
    assert!(arr.len() >= 50);
    let flagged: Vec<&str> = arr
        .iter()
        .filter(|r| !r["prefactor_exact"].as_bool().unwrap())
        .map(|r| r["name"].as_str().unwrap())
        .collect();
    assert_eq!(flagged, ["y", "hxh", "equal_superposition"]);
    assert!(arr.iter().all(|r| r["pass"].as_bool().unwrap()));
}

#[test]
fn unknown_gate_exits_three() {
    let out = run(&["verify", "nosuchgate"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("unknown gate"));
}

#[test]
fn usage_error_exits_two() {
    let out = run(&["synth"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_export_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("catalog.json");
    let out = run(&["catalog", "--json", json_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("ccz"));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(doc["version"], 1);
    let entries = doc["entries"].as_array().unwrap();
    assert!(entries.len() >= 50);
    for e in entries {
        assert!(e["program"]["num_majoranas"].as_u64().unwrap() >= 4);
        assert!(e["program"]["steps"].is_array());
    }
}

#[test]
fn synth_program_document_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ccz.json");
    let out = run(&[
        "synth",
        "cnz",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
        "--check",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("check PASS"));

    // the written document loads back as a runnable program
    let text = std::fs::read_to_string(&path).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["version"], 1);
    assert_eq!(doc["num_majoranas"], 8);
    let steps = doc["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 7);
    // exact angles serialize symbolically
    assert!(steps.iter().all(|s| s["angle"]["times_pi"] == true));

    // and it can be dumped in the physical basis
    let out = run(&[
        "dump",
        "--program",
        path.to_str().unwrap(),
        "--basis",
        "physical",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("dim 16 basis physical"));
}

#[test]
fn synth_diag_accepts_pi_expressions() {
    let out = run(&["synth", "diag", "--n", "1", "--phases", "0,pi", "--check"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("check PASS"));
}

#[test]
fn synth_cu_with_negative_angles() {
    let out = run(&[
        "synth", "cu", "--beta", "pi/3", "--gamma", "-pi/7", "--delta", "0.9", "--check",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("check PASS"));
}

#[test]
fn synth_rotations_and_hadamard_check() {
    for args in [
        vec![
            "synth", "rx", "--n", "2", "--k", "2", "--theta", "0.713", "--check",
        ],
        vec![
            "synth", "rz", "--n", "3", "--k", "3", "--theta", "-pi/5", "--check",
        ],
        vec!["synth", "h", "--n", "2", "--k", "1", "--check"],
        vec!["synth", "cnnot", "--n", "2", "--target", "2", "--check"],
        vec!["synth", "cnswap", "--n", "1", "--check"],
        vec!["synth", "cnphase", "--n", "2", "--phi", "3pi/8", "--check"],
    ] {
        let out = run(&args);
        assert!(out.status.success(), "{args:?}: {}", stderr(&out));
        assert!(stdout(&out).contains("check PASS"), "{args:?}");
    }
}

#[test]
fn search_finds_x_word() {
    let out = run(&["search", "--target", "x"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("word: 2 2"));
    assert!(text.contains("length 2"));
}

#[test]
fn search_reports_exhaustive_absence() {
    let out = run(&["search", "--target", "t", "--depth", "40"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("group exhausted"));
}

#[test]
fn enumerate_four_modes() {
    let out = run(&["enumerate", "--majoranas", "4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["order_projective"], 192);
    assert_eq!(doc["order_linear"], 384);
    assert_eq!(doc["completed"], true);
}

#[test]
fn enumerate_truncated_exits_three() {
    let out = run(&["enumerate", "--majoranas", "6", "--cap", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["completed"], false);
}

#[test]
fn orbit_summary() {
    let out = run(&["orbit", "--logical", "1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["size"], 6);
    assert_eq!(doc["amplitude_histogram"]["1"], 2);
    assert_eq!(doc["amplitude_histogram"]["2"], 4);
}

#[test]
fn certify_cz_reachable_and_ccz_not() {
    let out = run(&["certify", "--target", "cz"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["found_exponents"], serde_json::json!([1, 3, 3]));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = run(&[
        "certify",
        "--target",
        "ccz",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["combos_checked"], 256);
    assert_eq!(doc["distinct_projective_classes"], 128);
    assert!(doc["found_exponents"].is_null());
}

#[test]
fn dump_formats_floats_at_full_precision() {
    let out = run(&["dump", "h", "--basis", "logical"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "dim 2 basis logical");
    let first = lines.next().unwrap();
    // "0 0 <re> <im>": re is the realized 1/sqrt2, printed round-trippably
    let re: f64 = first.split_whitespace().nth(2).unwrap().parse().unwrap();
    assert!((re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    assert!(first.contains("7.07106781186547"), "{first}");
    // exact zeros print as a bare 0, negative zero normalized away
    assert!(text.lines().skip(1).any(|l| l.ends_with(" 0")));
    assert!(!text.contains(" -0\n"));
    assert_eq!(text.lines().count(), 1 + 4);
}

#[test]
fn dump_program_and_name_are_mutually_exclusive() {
    let out = run(&["dump"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("exactly one"));
}

#[test]
fn dump_json_matrix_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    let out = run(&["dump", "cz", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["version"], 1);
    assert_eq!(doc["dimension"], 4);
    assert_eq!(doc["basis"], "logical");
    let entries = doc["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert_eq!(entries[3][3][0], -1.0);
    // schema files in the repository describe these documents
    let schema_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas");
    for name in [
        "program.schema.json",
        "matrix.schema.json",
        "certificate.schema.json",
        "catalog.schema.json",
    ] {
        let schema: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(schema_dir.join(name)).unwrap()).unwrap();
        assert_eq!(schema["$schema"], "http://json-schema.org/draft-07/schema#");
        assert!(schema["properties"].is_object(), "{name}");
    }
}

#[test]
fn dump_rejects_unknown_basis() {
    let out = run(&["dump", "h", "--basis", "sideways"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown basis"));
}
