//! End-to-end tests of the binary: exit codes, document round trips, and
//! output determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gq() -> Command {
    Command::new(env!("CARGO_BIN_EXE_gq"))
}

fn run(args: &[&str]) -> Output {
    gq().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("gq-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_verify_round_trip() {
    let out = tmp("w32.json");
    let o = run(&["construct", "--family", "W3", "--q", "2", "--out", path_str(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("order (2,2), 15 points, 15 lines"));

    let v = run(&["verify", path_str(&out)]);
    assert_eq!(v.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&v.stdout).starts_with("(2,2), OK"));
}

#[test]
fn t2star_construct_matches_expected_order() {
    let out = tmp("gq35.json");
    let o = run(&["construct", "--t2star", "--q", "4", "--out", path_str(&out)]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stdout).contains("order (3,5), 64 points, 96 lines"));
}

#[test]
fn h4_construct_reports_order_four_eight() {
    let out = tmp("h44.json");
    let o = run(&["construct", "--family", "H4", "--q", "2", "--out", path_str(&out)]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stdout).contains("order (4,8), 165 points, 297 lines"));
}

#[test]
fn geometry_documents_round_trip_byte_identically() {
    let out = tmp("w32-rt.json");
    run(&["construct", "--family", "W3", "--q", "2", "--out", path_str(&out)]);
    let bytes = std::fs::read(&out).unwrap();
    let doc: gq_cli::formats::GeometryDocument = serde_json::from_slice(&bytes).unwrap();
    let mut reemitted = serde_json::to_string_pretty(&doc).unwrap();
    reemitted.push('\n');
    assert_eq!(bytes, reemitted.into_bytes());
}

#[test]
fn damaged_geometry_fails_with_witness() {
    let out = tmp("w32-damaged.json");
    let o = run(&["construct", "--family", "W3", "--q", "2", "--out", path_str(&out)]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    let lines = doc["lines"].as_array_mut().unwrap();
    lines.pop();
    doc["order"] = serde_json::Value::Null;
    std::fs::write(&out, serde_json::to_string(&doc).unwrap()).unwrap();

    let v = run(&["verify", path_str(&out)]);
    assert_eq!(v.status.code(), Some(1));
    let err = String::from_utf8_lossy(&v.stderr);
    assert!(err.contains("point") || err.contains("line"), "witness missing: {err}");
}

#[test]
fn malformed_json_exits_two() {
    let out = tmp("broken.json");
    std::fs::write(&out, "{ not json").unwrap();
    let v = run(&["verify", path_str(&out)]);
    assert_eq!(v.status.code(), Some(2));
    let missing = tmp("no-such-file.json");
    let _ = std::fs::remove_file(&missing);
    let v = run(&["verify", path_str(&missing)]);
    assert_eq!(v.status.code(), Some(2));
}

#[test]
fn sieve_exit_codes_follow_the_contract() {
    for (table, code) in [
        ("Pi", 0),
        ("C5", 0),
        ("NotNovelty", 0),
        ("O1", 0),
        ("O2", 0),
        ("Leftover", 0),
        ("PSU12", 3),
        ("Delta", 3),
    ] {
        let o = run(&["sieve", "--table", table]);
        assert_eq!(o.status.code(), Some(code), "table {table}");
    }
    let o = run(&["sieve", "--table", "nonsense"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn sieve_order_equation_reports_discriminant() {
    let o = run(&["sieve", "--order", "57", "--t", "5"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("Delta = 1156 = 34^2"));
    assert!(text.contains("no quadrangle"));
}

#[test]
fn sieve_pair_reports_divisibility_witness() {
    let o = run(&["sieve", "--pair", "2,3"]);
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("infeasible"));
    assert!(text.contains("5"));
}

#[test]
fn symmetry_tests_through_files() {
    let geom = tmp("w32-sym.json");
    let group = tmp("w32-group.json");
    let o = run(&[
        "construct",
        "--family",
        "W3",
        "--q",
        "2",
        "--out",
        path_str(&geom),
        "--group-out",
        path_str(&group),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("order 720"));

    for (test, expect) in [
        ("flag", "flag-transitive: true"),
        ("antiflag", "antiflag-transitive: true (antiflags: 180)"),
        ("local-arc=3", "locally 3-arc-transitive: true"),
    ] {
        let o = run(&["symmetry", path_str(&geom), path_str(&group), "--test", test]);
        assert_eq!(o.status.code(), Some(0), "test {test}");
        assert!(
            String::from_utf8_lossy(&o.stdout).contains(expect),
            "test {test}: {}",
            String::from_utf8_lossy(&o.stdout)
        );
    }
}

#[test]
fn gq35_symmetry_verdicts_through_files() {
    let geom = tmp("gq35-sym.json");
    let group = tmp("gq35-group-sym.json");
    let o = run(&[
        "construct",
        "--t2star",
        "--q",
        "4",
        "--out",
        path_str(&geom),
        "--group-out",
        path_str(&group),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stdout).contains("order 138240"));

    let o = run(&["symmetry", path_str(&geom), path_str(&group), "--test", "antiflag"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("antiflag-transitive: true (antiflags: 5760)"));

    let o = run(&["symmetry", path_str(&geom), path_str(&group), "--test", "local-arc=4"]);
    assert!(String::from_utf8_lossy(&o.stdout).contains("locally 4-arc-transitive: false"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = run(&["sieve", "--table", "Delta"]);
    let b = run(&["sieve", "--table", "Delta"]);
    assert_eq!(a.stdout, b.stdout);

    let out1 = tmp("det1.json");
    let out2 = tmp("det2.json");
    run(&["construct", "--t2star", "--q", "4", "--out", path_str(&out1)]);
    run(&["construct", "--t2star", "--q", "4", "--out", path_str(&out2)]);
    assert_eq!(
        std::fs::read(&out1).unwrap(),
        std::fs::read(&out2).unwrap()
    );
}

#[test]
fn group_document_round_trip_preserves_order() {
    let geom = tmp("qm5.json");
    let group = tmp("qm5-group.json");
    let o = run(&[
        "construct",
        "--family",
        "Qminus5",
        "--q",
        "2",
        "--out",
        path_str(&geom),
        "--group-out",
        path_str(&group),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&group).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(doc["order"], "51840");
    assert_eq!(doc["degree"], 72);

    // tampering with the claimed order must fail the load
    let tampered = text.replace("51840", "51841");
    std::fs::write(&group, tampered).unwrap();
    let v = run(&["symmetry", path_str(&geom), path_str(&group), "--test", "flag"]);
    assert_eq!(v.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&v.stderr).contains("claimed order"));
}
