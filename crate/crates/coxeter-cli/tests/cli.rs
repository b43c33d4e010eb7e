//! End-to-end tests of the `coxcx` binary: exit codes, output shapes, the
//! golden-table verifier, and the orbit cache's tamper recovery.

use std::path::Path;
use std::process::{Command, Output};

fn coxcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxcx"))
        .args(args)
        .output()
        .expect("spawning coxcx")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process exited normally")
}

#[test]
fn bare_invocation_is_a_usage_error() {
    let out = coxcx(&[]);
    assert_eq!(exit_code(&out), 2);
    let combined = format!("{}{}", stdout(&out), stderr(&out));
    assert!(combined.contains("Usage:"), "bare invocation should print usage");
}

#[test]
fn unknown_family_is_a_usage_error() {
    let out = coxcx(&["orbit", "--family", "Q9", "--type", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr(&out).contains("unknown family"));

    let out = coxcx(&["realize", "--family", "E9"]);
    assert_eq!(exit_code(&out), 2);

    let out = coxcx(&["orbit", "--family", "D4", "--type", "9"]);
    assert_eq!(exit_code(&out), 2, "out-of-range vertex type");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = coxcx(&["orbit", "--family", "D4", "--type", "1", "--bogus"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(exit_code(&coxcx(&["--help"])), 0);
    assert_eq!(exit_code(&coxcx(&["--version"])), 0);
}

#[test]
fn realize_prints_roots_and_vertices() {
    let out = coxcx(&["realize", "--family", "E8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("simple_root"));
    assert!(text.contains("vertex"));

    let out = coxcx(&["realize", "--family", "E8", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["family"], "E8");
    assert_eq!(doc["simple_roots"].as_array().unwrap().len(), 8);
}

#[test]
fn segment_classifies_the_short_triangle_side() {
    let out = coxcx(&[
        "segment",
        "--family",
        "E7",
        "--from",
        "v2",
        "--to",
        "(1,-1,1,1,1,1,-1,-1)",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("type\t232"), "expected type 232 in:\n{text}");
    assert!(text.contains("angle\tpi/3"));
    assert!(text.contains("singular\ttrue"));
}

#[test]
fn bigon_honors_exclusions_and_angle_filter() {
    let out = coxcx(&[
        "bigon", "--family", "E8", "--base", "7", "--target", "7", "--exclude", "2,8",
        "--min-angle", "90deg",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    let rows: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with("representative") && !l.is_empty())
        .collect();
    assert_eq!(rows.len(), 4, "far rows on walls 2,8:\n{text}");
    assert!(text.contains("(0,0,1,1,1,1,-1,-1)\tarccos(-2/3)\t-2/3\t3\t216"));
    assert!(text.contains("(0,0,0,0,0,2,-1,-1)\tarccos(-1/3)\t-1/3\t6\t27"));

    // The same filter expressed as an exact angle string.
    let exact = coxcx(&[
        "bigon", "--family", "E8", "--base", "7", "--target", "7", "--exclude", "2,8",
        "--min-angle", "pi/2",
    ]);
    assert_eq!(stdout(&exact), text);
}

#[test]
fn verify_tables_passes_on_the_embedded_goldens() {
    let out = coxcx(&["verify-tables"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("PASS\tE8")));
    assert!(!text.contains("FAIL"));

    let one = coxcx(&["verify-tables", "--family", "E8"]);
    assert_eq!(exit_code(&one), 0);
    let text = stdout(&one);
    assert!(text.lines().all(|l| !l.starts_with("PASS\tE6")));
}

#[test]
fn verify_tables_fails_on_a_tampered_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../golden");
    for name in ["tables_d4.json", "orbits_d4.json"] {
        std::fs::copy(src.join(name), dir.path().join(name)).unwrap();
    }
    // Corrupt one class size in the frozen table.
    let tables_path = dir.path().join("tables_d4.json");
    let body = std::fs::read_to_string(&tables_path).unwrap();
    let tampered = body.replacen("\"size\": 6", "\"size\": 7", 1);
    assert_ne!(body, tampered, "the tamper target must exist");
    std::fs::write(&tables_path, tampered).unwrap();

    let out = coxcx(&[
        "verify-tables",
        "--family",
        "D4",
        "--golden-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("FAIL"), "stdout: {}", stdout(&out));
}

#[test]
fn orbit_cache_round_trips_and_recovers_from_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["orbit", "--family", "D4", "--type", "3", "--full"];

    // First run computes and stores; second run hits the cache; both print
    // the same bytes as a run with the cache disabled.
    let first = coxcx(&[&args[..], &["--cache-dir", cache]].concat());
    assert_eq!(exit_code(&first), 0, "stderr: {}", stderr(&first));
    let cache_file = dir.path().join("orbit_d4_t3_v0.1.0.json");
    assert!(cache_file.exists(), "cache file was not written");
    let stored = std::fs::read(&cache_file).unwrap();

    let second = coxcx(&[&args[..], &["--cache-dir", cache]].concat());
    assert_eq!(stdout(&second), stdout(&first));
    assert_eq!(
        std::fs::read(&cache_file).unwrap(),
        stored,
        "a cache hit must not rewrite the file"
    );

    let uncached = coxcx(&[&args[..], &["--no-cache"]].concat());
    assert_eq!(stdout(&uncached), stdout(&first));

    // Corrupt one orbit vector without updating the checksum: the run warns
    // on stderr, recomputes, prints the same bytes, and repairs the file.
    let mut doc: serde_json::Value = serde_json::from_slice(&stored).unwrap();
    let entry = doc["vectors"][0][0].as_i64().unwrap();
    doc["vectors"][0][0] = serde_json::Value::from(entry + 1);
    std::fs::write(&cache_file, serde_json::to_string_pretty(&doc).unwrap()).unwrap();

    let healed = coxcx(&[&args[..], &["--cache-dir", cache]].concat());
    assert_eq!(exit_code(&healed), 0);
    assert_eq!(stdout(&healed), stdout(&first));
    assert!(
        stderr(&healed).contains("checksum"),
        "expected a checksum warning, got: {}",
        stderr(&healed)
    );
    assert_eq!(
        std::fs::read(&cache_file).unwrap(),
        stored,
        "the cache file must be restored byte-identically"
    );
}

#[test]
fn lab_subcommands_report_success() {
    let out = coxcx(&["lab", "root-types", "--family", "E8"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));

    let out = coxcx(&["lab", "walls", "--family", "D5"]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));

    let out = coxcx(&[
        "lab", "gap", "--family", "D4", "--roots", "4", "--samples", "25", "--seed", "7",
    ]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("all_pass\ttrue"));
}

#[test]
fn json_output_is_stable_and_parses() {
    let a = coxcx(&[
        "bigon", "--family", "E6", "--base", "2", "--target", "2", "--format", "json",
    ]);
    assert_eq!(exit_code(&a), 0);
    let b = coxcx(&[
        "bigon", "--family", "E6", "--base", "2", "--target", "2", "--format", "json",
    ]);
    assert_eq!(stdout(&a), stdout(&b), "output must be deterministic");
    let doc: serde_json::Value = serde_json::from_str(&stdout(&a)).expect("valid JSON");
    assert_eq!(doc["rows"].as_array().unwrap().len(), 3);
}
