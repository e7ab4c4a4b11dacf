use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;
use stcore::CoreParams;
use stcore_cli::{cache_path, run, CACHE_VERSION};

struct Outcome {
    code: i32,
    out: String,
    err: String,
}

fn stcore(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stcore").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = stcore(&full);
    assert_eq!(o.code, 0, "{}", o.err);
    serde_json::from_str(&o.out).unwrap()
}

#[test]
fn converts_both_ways() {
    let a = stcore(&["convert", "--partition", "7,6,4,4,1"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.out, "partition (7, 6, 4, 4, 1)\nbeta-set {11, 9, 6, 5, 1}\n");
    let b = stcore(&["convert", "--beta", "11,9,6,5,1"]);
    assert_eq!(b.out, a.out);
}

#[test]
fn hook_rows_of_a_small_partition() {
    let o = stcore(&["hooks", "--beta", "6,4,1"]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert!(o.out.contains("H_1 = {6, 4, 3, 1}"), "{}", o.out);
    assert!(o.out.contains("H_2 = {4, 2, 1}"));
    assert!(o.out.contains("H_3 = {1}"));
}

#[test]
fn bead_diagram_matches_golden() {
    let o = stcore(&["bead", "--s", "5", "--t", "6", "--circle", "9,4,3,2"]);
    assert_eq!(o.code, 0, "{}", o.err);
    let golden = fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/bead_5_6_circled.txt"),
    )
    .unwrap();
    assert!(o.out.starts_with(&golden), "{}", o.out);
    assert!(o.out.contains("core: true"));
}

#[test]
fn verification_reports_no_violations() {
    let o = stcore(&["verify", "maximal", "--s", "5", "--t", "6"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out.lines().next(), Some("maximal (5,6): 42 checked, 0 violations"));
    let v = json(&["verify", "gen1", "--s", "3", "--t", "4", "--gen-bound", "12"]);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn gap_set_of_a_triple() {
    let o = stcore(&["tcore", "beta-t", "--ts", "5,6,7"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.out, "{9, 8, 4, 3, 2, 1}\n");
    let m = stcore(&["tcore", "maximal", "--ts", "5,6,7"]);
    assert!(m.out.contains("unique: false"));
    assert!(m.out.contains("(4, 4, 1, 1, 1, 1)"));
    assert!(m.out.contains("(6, 2, 2, 2)"));
}

#[test]
fn canonical_trace_lists_moves() {
    let o = stcore(&["canonical", "--s", "5", "--t", "6", "--beta", "9,4,3,2,1", "--apex", "19", "--depth", "3", "--trace"]);
    assert_eq!(o.code, 0, "{}", o.err);
    assert!(o.out.contains("{9, 8, 4, 3, 2}"), "{}", o.out);
    assert!(o.out.contains("move 1"), "{}", o.out);
}

#[test]
fn exit_codes_separate_domain_and_usage_errors() {
    assert_eq!(stcore(&["check-core", "--s", "5", "--t", "7", "--beta", "9,4,3,2,1"]).code, 0);
    let domain = stcore(&["check-core", "--s", "5", "--t", "4", "--beta", "1"]);
    assert_eq!(domain.code, 1);
    assert!(domain.err.starts_with("error: "));
    assert_eq!(stcore(&["check-core", "--s", "4", "--t", "6", "--beta", "1"]).code, 1);
    assert_eq!(stcore(&["frobnicate"]).code, 2);
    assert_eq!(stcore(&["convert"]).code, 2);
    assert_eq!(stcore(&["convert", "--partition", "1", "--beta", "1"]).code, 2);
    assert_eq!(stcore(&["tcore", "conjecture", "--ts", "5,6,7"]).code, 2);
}

#[test]
fn json_output_is_versioned() {
    for args in [
        &["convert", "--beta", "3,1"][..],
        &["delta", "--s", "5", "--t", "7", "--generator", "20"],
        &["enumerate", "--s", "4", "--t", "5", "--by-size"],
        &["tcore", "beta-t", "--ts", "3,4,5"],
    ] {
        let v = json(args);
        assert_eq!(v["version"], 1, "{args:?}");
    }
    let e = json(&["enumerate", "--s", "5", "--t", "6", "--by-size"]);
    assert_eq!(e["count"], 42);
    let back = serde_json::to_string(&e).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&back).unwrap(), e);
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["--format", "json", "enumerate", "--s", "5", "--t", "7", "--by-size", "--witnesses"];
    let first = stcore(&args).out;
    for _ in 0..3 {
        assert_eq!(stcore(&args).out, first);
    }
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = stcore(&["--out", path.to_str().unwrap(), "verify", "maximal", "--s", "3", "--t", "5"]);
    assert_eq!(o.code, 0, "{}", o.err);
    let written = fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("maximal (3,5):"), "{written}");
}

#[test]
fn cache_round_trip_and_recovery() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["--cache", d, "--format", "json", "enumerate", "--s", "5", "--t", "7", "--witnesses"];
    let fresh = stcore(&args);
    assert_eq!(fresh.code, 0, "{}", fresh.err);
    let file = cache_path(dir.path(), CoreParams::new(5, 7).unwrap());
    assert!(file.exists());

    let hit = stcore(&args);
    assert_eq!(hit.out, fresh.out);
    assert!(hit.err.contains("cached"), "{}", hit.err);

    fs::write(&file, b"{ not json").unwrap();
    let corrupt = stcore(&args);
    assert_eq!(corrupt.out, fresh.out);
    assert!(corrupt.err.contains("unreadable cache"), "{}", corrupt.err);

    let mut stale: Value = serde_json::from_slice(&fs::read(&file).unwrap()).unwrap();
    assert_eq!(stale["version"], CACHE_VERSION);
    stale["version"] = 0.into();
    fs::write(&file, serde_json::to_vec(&stale).unwrap()).unwrap();
    let old = stcore(&args);
    assert_eq!(old.out, fresh.out);
    assert!(old.err.contains("stale"), "{}", old.err);
    assert!(stcore(&args).err.contains("cached"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_stcore");
    let ok = Command::new(bin).args(["convert", "--beta", "2,1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "partition (1, 1)\nbeta-set {2, 1}\n");
    let bad = Command::new(bin).args(["closure", "--s", "6", "--t", "9", "--beta", "1"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("--nope").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
