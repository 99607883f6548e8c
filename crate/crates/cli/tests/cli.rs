use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn mdcolor(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mdcolor"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

const C4: &str = "4 4\n0 1\n1 2\n2 3\n0 3\n";

#[test]
fn construct_cycle_then_verify() {
    let dir = TempDir::new().unwrap();
    let r = json(&mdcolor(dir.path(), &["construct", "cycle", "5"]));
    assert_eq!(r["palette"], 2);
    let colors = std::fs::read_to_string(dir.path().join("coloring.txt")).unwrap();
    assert_eq!(colors.split_whitespace().count(), 5);
    let v = json(&mdcolor(
        dir.path(),
        &["verify", "graph.txt", "coloring.txt"],
    ));
    assert_eq!(v["is_md"], true);
}

#[test]
fn construct_round_trips_for_every_family() {
    let dir = TempDir::new().unwrap();
    let families: [&[&str]; 12] = [
        &["path", "6"],
        &["star", "5"],
        &["tree", "9", "4"],
        &["cycle", "8"],
        &["unicyclic", "5", "3"],
        &["complete", "5"],
        &["complete_minus", "5"],
        &["complete_multipartite", "2,2,3"],
        &["petersen"],
        &["broom", "7"],
        &["ng_lower", "8"],
        &["join", "complete", "1", "square", "path", "4"],
    ];
    for spec in families {
        let mut args = vec!["construct"];
        args.extend_from_slice(spec);
        args.extend(["--graph", "g.txt", "--coloring", "c.txt"]);
        let r = json(&mdcolor(dir.path(), &args));
        let v = json(&mdcolor(dir.path(), &["verify", "g.txt", "c.txt"]));
        assert_eq!(v["is_md"], true, "{spec:?}");
        let md = json(&mdcolor(dir.path(), &["md", "g.txt"]));
        assert_eq!(md["md"], r["palette"], "{spec:?}");
    }
}

#[test]
fn alternating_c4_coloring_verifies() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "c4.txt", C4);
    write(dir.path(), "alt.txt", "1 2 1 2\n");
    let out = mdcolor(dir.path(), &["verify", "c4.txt", "alt.txt"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["is_md"], true);
    write(dir.path(), "bad.txt", "1 2 3 3\n");
    let v = json(&mdcolor(dir.path(), &["verify", "c4.txt", "bad.txt"]));
    assert_eq!(v["is_md"], false);
    assert!(!v["uncovered_pairs"].as_array().unwrap().is_empty());
}

#[test]
fn md_of_k23_is_one() {
    let dir = TempDir::new().unwrap();
    let out = mdcolor(
        dir.path(),
        &["generate", "complete_multipartite", "2,3", "-o", "k23.txt"],
    );
    assert!(out.status.success());
    let r = json(&mdcolor(dir.path(), &["md", "k23.txt"]));
    assert_eq!(r["md"], 1);
    let cert = json(&mdcolor(dir.path(), &["certify1", "k23.txt"]));
    assert_eq!(cert["gadgets"][0]["kind"], "K23");
    write(dir.path(), "c4.txt", C4);
    assert_eq!(json(&mdcolor(dir.path(), &["certify1", "c4.txt"])), "none");
}

#[test]
fn md_and_oracle_agree() {
    let dir = TempDir::new().unwrap();
    let graphs = [
        C4,
        "5 6\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n",
        "6 9\n0 1\n0 2\n1 2\n1 3\n2 4\n3 4\n3 5\n4 5\n0 5\n",
        "5 7\n0 1\n0 2\n0 3\n0 4\n1 2\n2 3\n3 4\n",
    ];
    for (i, text) in graphs.iter().enumerate() {
        let name = format!("g{i}.txt");
        write(dir.path(), &name, text);
        let a = json(&mdcolor(dir.path(), &["md", &name]));
        let b = json(&mdcolor(dir.path(), &["oracle", &name]));
        assert_eq!(a["md"], b["md"], "{text}");
    }
    // graph6 input: "Dhc" is C_5
    write(dir.path(), "c5.g6", "Dhc\n");
    assert_eq!(json(&mdcolor(dir.path(), &["md", "c5.g6"]))["md"], 2);
}

#[test]
fn oracle_cap_override() {
    let dir = TempDir::new().unwrap();
    mdcolor(dir.path(), &["generate", "complete", "6", "-o", "k6.txt"]);
    assert_eq!(
        mdcolor(dir.path(), &["oracle", "k6.txt"]).status.code(),
        Some(1)
    );
    let out = mdcolor(dir.path(), &["oracle", "k6.txt", "--oracle-cap", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("cap of 4"), "{stderr}");
}

#[test]
fn decide_reports_witness_or_absence() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "c4.txt", C4);
    let r = json(&mdcolor(
        dir.path(),
        &["decide", "c4.txt", "-k", "2", "--deterministic"],
    ));
    assert_eq!(r["found"], true);
    assert_eq!(r["witness"].as_array().unwrap().len(), 4);
    let r = json(&mdcolor(dir.path(), &["decide", "c4.txt", "-k", "3"]));
    assert_eq!(r["found"], false);
    assert!(r["witness"].is_null());
}

#[test]
fn deterministic_output_is_stable() {
    let dir = TempDir::new().unwrap();
    mdcolor(dir.path(), &["generate", "petersen", "-o", "p.txt"]);
    let a = mdcolor(dir.path(), &["--deterministic", "md", "p.txt"]);
    let b = mdcolor(dir.path(), &["--deterministic", "md", "p.txt"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn complement_and_ng() {
    let dir = TempDir::new().unwrap();
    let out = mdcolor(dir.path(), &["generate", "broom", "5"]);
    std::fs::write(dir.path().join("b5.txt"), &out.stdout).unwrap();
    let r = json(&mdcolor(dir.path(), &["ng", "b5.txt"]));
    assert_eq!(
        (r["md"].as_u64(), r["md_complement"].as_u64()),
        (Some(4), Some(2))
    );
    assert_eq!(r["sum"], 6);
    let co = mdcolor(dir.path(), &["complement", "b5.txt"]);
    let text = String::from_utf8(co.stdout).unwrap();
    assert!(text.starts_with("5 6\n"), "{text}");
}

#[test]
fn scan_and_search() {
    let dir = TempDir::new().unwrap();
    let r = json(&mdcolor(dir.path(), &["scan", "-n", "5", "--dedup"]));
    assert_eq!(
        (
            r["min_sum"]["value"].as_u64(),
            r["max_sum"]["value"].as_u64()
        ),
        (Some(4), Some(6))
    );
    let r = json(&mdcolor(
        dir.path(),
        &[
            "search", "-n", "7", "--target", "sum=2", "--budget", "1000", "--seed", "1",
        ],
    ));
    assert_eq!(r["witness"]["sum"], 2);
    let r = json(&mdcolor(
        dir.path(),
        &["search", "-n", "7", "--target", "sum=9", "--budget", "50"],
    ));
    assert!(r["witness"].is_null());
}

#[test]
fn random_is_reproducible_and_writes_csv() {
    let dir = TempDir::new().unwrap();
    let args = [
        "random", "-n", "20", "-p", "0.5", "-t", "12", "--seed", "4", "--csv", "t.csv",
    ];
    let a = mdcolor(dir.path(), &args);
    let b = mdcolor(dir.path(), &args);
    assert_eq!(a.stdout, b.stdout);
    let r = json(&a);
    assert_eq!(r["trials"], 12);
    let csv = std::fs::read_to_string(dir.path().join("t.csv")).unwrap();
    assert_eq!(csv.lines().count(), 13);
}

#[test]
fn plain_format() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "c4.txt", C4);
    let out = mdcolor(dir.path(), &["--format", "plain", "md", "c4.txt"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("md 2\nwitness "), "{text}");
}

#[test]
fn exit_code_matrix() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "c4.txt", C4);
    write(dir.path(), "garbage.txt", "3 1\n0 x\n");
    write(dir.path(), "loop.txt", "3 1\n1 1\n");
    write(dir.path(), "split.txt", "4 2\n0 1\n2 3\n");
    write(dir.path(), "short.txt", "1 2\n");
    write(dir.path(), "zero.txt", "1 0 1 2\n");
    let cases: [(&[&str], i32); 14] = [
        (&["frobnicate"], 2),
        (&["md"], 2),
        (&["md", "missing.txt"], 2),
        (&["md", "garbage.txt"], 2),
        (&["verify", "c4.txt", "zero.txt"], 2),
        (&["generate", "hypercube", "3"], 2),
        (&["search", "-n", "7", "--target", "mean=2"], 2),
        (&["md", "loop.txt"], 2),
        (&["verify", "c4.txt", "short.txt"], 1),
        (&["decide", "split.txt", "-k", "1"], 1),
        (&["certify1", "split.txt"], 1),
        (&["ng", "c4.txt"], 1),
        (&["scan", "-n", "7"], 1),
        (&["random", "-n", "5", "-p", "2", "-t", "3"], 1),
    ];
    for (args, code) in cases {
        let out = mdcolor(dir.path(), args);
        assert_eq!(
            out.status.code(),
            Some(code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty(), "{args:?} printed no diagnostic");
    }
    let out = mdcolor(dir.path(), &["md", "garbage.txt"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}
