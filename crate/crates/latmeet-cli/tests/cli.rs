//! End-to-end tests of the `latmeet` binary: command output, the exit-code
//! contract (0 success, 1 verification failure, 2 input error, 3 resource
//! limit), JSON determinism, and the environment cap override.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_latmeet")
}

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .env_remove("LATMEET_CAPS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// A scratch directory unique to this test process and call.
fn scratch_dir(tag: &str) -> PathBuf {
    static COUNTER: AtomicU32 = AtomicU32::new(0);
    let dir = std::env::temp_dir().join(format!(
        "latmeet-cli-test-{}-{}-{tag}",
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).expect("scratch dir creates");
    dir
}

#[test]
fn lattice_check_reports_pentagon_witness() {
    let dir = scratch_dir("pentagon");
    let path = dir.join("pentagon.json");
    std::fs::write(
        &path,
        r#"{"elements": ["o", "a", "b", "c", "i"],
            "covers": [["o","a"], ["a","b"], ["b","i"], ["o","c"], ["c","i"]]}"#,
    )
    .expect("fixture writes");
    let out = run(&["lattice", "check", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("valid lattice with 5 elements"), "got: {text}");
    assert!(text.contains("modular: false"), "got: {text}");
    assert!(text.contains("pentagon witness"), "got: {text}");
    assert!(!text.contains("pentagon witness: none"), "got: {text}");
}

#[test]
fn lattice_check_malformed_json_is_input_error() {
    let dir = scratch_dir("malformed");
    let path = dir.join("bad.json");
    std::fs::write(&path, "this is not json").expect("fixture writes");
    let out = run(&["lattice", "check", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("error"), "got: {}", stderr(&out));
}

#[test]
fn lattice_check_missing_file_is_input_error() {
    let out = run(&["lattice", "check", "/nonexistent/no-such-lattice.json"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn analyze_diamond_json_is_deterministic_and_correct() {
    let args = ["analyze", "--family", "diamond", "--n", "3", "--format", "json"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0, "stderr: {}", stderr(&first));
    assert_eq!(first.stdout, second.stdout, "JSON output must be byte-identical across runs");

    let doc: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid JSON");
    assert_eq!(doc["generators"], 3);
    assert_eq!(doc["lattice"]["modular"], true);
    assert_eq!(doc["lattice"]["distributive"], false);
    assert_eq!(doc["report"]["dim"], 2);
    assert_eq!(doc["report"]["depth"], 2);
    assert_eq!(doc["report"]["pd"], 3);
    assert_eq!(doc["report"]["reg"], 3);
    assert_eq!(doc["report"]["is_gorenstein"], true);
    assert_eq!(doc["report"]["multiplicity"], "8");
}

#[test]
fn analyze_accepts_lattice_files() {
    let fixture = repo_root().join("fixtures/reg3_a.json");
    let out = run(&["analyze", "--file", fixture.to_str().unwrap(), "--format", "json"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    assert_eq!(doc["report"]["reg"], 3);
    assert_eq!(doc["lattice"]["elements"], 9);
}

#[test]
fn analyze_groebner_listing_matches_closed_form() {
    let out = run(&["analyze", "--family", "diamond", "--n", "3", "--gb"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("reduced Groebner basis (6 elements):"), "got: {text}");
    for g in ["y1*y2 - x*z", "x*y1*z - x*y3*z", "x*y3^2*z - x^2*z^2"] {
        assert!(text.contains(g), "missing `{g}` in: {text}");
    }
}

#[test]
fn analyze_rejects_conflicting_or_missing_sources() {
    let out = run(&[
        "analyze",
        "--file",
        "whatever.json",
        "--family",
        "diamond",
        "--n",
        "3",
    ]);
    assert_eq!(exit_code(&out), 2, "conflicting sources must be an input error");

    let out = run(&["analyze"]);
    assert_eq!(exit_code(&out), 2, "a source is required");

    let out = run(&["analyze", "--family", "lk", "--n", "3"]);
    assert_eq!(exit_code(&out), 2, "lk needs --k");

    let out = run(&["analyze", "--family", "chain"]);
    assert_eq!(exit_code(&out), 2, "chain needs --m");
}

#[test]
fn caps_env_override_hits_resource_limit() {
    let out = Command::new(bin())
        .args(["analyze", "--family", "diamond", "--n", "3"])
        .env("LATMEET_CAPS", "max_pair_reductions=1")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 3, "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("resource limit"), "got: {}", stderr(&out));

    let out = Command::new(bin())
        .args(["analyze", "--family", "diamond", "--n", "3"])
        .env("LATMEET_CAPS", "max_pair_reductions=not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 2, "malformed cap override must be an input error");
}

#[test]
fn enumerate_finds_the_unique_small_modular_nondistributive_class() {
    let args = [
        "enumerate",
        "--max-size",
        "5",
        "--filter",
        "modular-nondistributive",
        "--format",
        "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0, "stderr: {}", stderr(&first));
    assert_eq!(first.stdout, second.stdout, "JSON output must be byte-identical across runs");
    let rows: Vec<serde_json::Value> =
        serde_json::from_slice(&first.stdout).expect("valid JSON");
    assert_eq!(rows.len(), 1, "exactly one such class with at most 5 elements");
    assert_eq!(rows[0]["size"], 5);
    assert_eq!(rows[0]["reg"], 3);
}

#[test]
fn enumerate_size_limits() {
    let out = run(&["enumerate", "--max-size", "9"]);
    assert_eq!(exit_code(&out), 3, "beyond the enumeration limit");
    assert!(stderr(&out).contains("resource limit"), "got: {}", stderr(&out));

    let out = run(&["enumerate", "--max-size", "8", "--report", "size,modular"]);
    assert_eq!(exit_code(&out), 0, "structure-only reports work at size 8");
    assert!(stdout(&out).lines().count() > 200, "hundreds of classes expected");

    let out = run(&["enumerate", "--max-size", "8", "--report", "reg"]);
    assert_eq!(exit_code(&out), 2, "algebraic fields are capped at size 7");
}

#[test]
fn verify_paper_rejects_out_of_range_max_n() {
    for bad in ["2", "7"] {
        let out = run(&["verify-paper", "--max-n", bad]);
        assert_eq!(exit_code(&out), 2, "--max-n {bad} must be an input error");
    }
}

#[test]
fn verify_paper_refuses_invalid_fixtures_by_name() {
    let dir = scratch_dir("bad-fixtures");
    // Valid JSON, valid poset, but not a lattice: a and b have no join.
    let not_a_lattice = r#"{"elements": ["a", "b"], "covers": []}"#;
    for file in ["reg3_a.json", "reg3_b.json", "reg4_c.json", "reg5_a.json", "reg5_b.json"] {
        std::fs::write(dir.join(file), not_a_lattice).expect("fixture writes");
    }
    let out = run(&[
        "verify-paper",
        "--max-n",
        "3",
        "--fixtures",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1, "structurally invalid fixtures fail verification");
    let text = stdout(&out);
    assert!(text.contains("fixture reg3_a.json: FAIL"), "got: {text}");
    assert!(text.contains("invalid lattice in reg3_a.json"), "got: {text}");
    assert!(text.contains("overall: FAIL"), "got: {text}");
}

#[test]
fn verify_paper_full_run_passes_and_reports_differing_notes() {
    let out = Command::new(bin())
        .args(["verify-paper", "--max-n", "3"])
        .current_dir(repo_root())
        .env_remove("LATMEET_CAPS")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("diamond(n=3): PASS"), "got: {text}");
    assert!(text.contains("lk(n=3,k=1): PASS"), "got: {text}");
    assert!(text.contains("fixture reg4_c.json: PASS"), "got: {text}");
    assert!(text.contains("overall: PASS"), "got: {text}");
    // The recorded regularity of the third fixture disagrees with the
    // computed value; that must surface as a differing note, never
    // silently.
    let reg4_note = text
        .lines()
        .skip_while(|l| !l.contains("fixture reg4_c.json"))
        .find(|l| l.contains("fixture.recorded-regularity"))
        .expect("recorded-regularity note printed");
    assert!(reg4_note.contains("[note/DIFFERS]"), "got: {reg4_note}");
    assert!(text.contains("reference notes differ"), "got: {text}");
}
