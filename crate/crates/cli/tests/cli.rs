use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn kcr(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kcr"))
        .current_dir(dir)
        .args(["--store", "results.jsonl"])
        .args(args)
        .output()
        .expect("kcr runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn number_prints_six_and_stores_the_outcome() {
    let dir = TempDir::new().unwrap();
    let o = kcr(
        dir.path(),
        &["number", "--m", "3", "--kappa", "3", "--colors", "2", "--nmax", "6"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "6\n");

    let store = fs::read_to_string(dir.path().join("results.jsonl")).unwrap();
    let manifest: serde_json::Value = serde_json::from_str(store.lines().next().unwrap()).unwrap();
    assert_eq!(manifest["command"], "number");
    assert_eq!(manifest["params"]["nmax"], 6);
    assert_eq!(manifest["outcome"]["value"]["kind"], "exact");
    assert_eq!(manifest["outcome"]["value"]["n"], 6);
    assert_eq!(manifest["digest"].as_str().unwrap().len(), 64);
    assert!(dir.path().join("results.jsonl.index.json").exists());
}

#[test]
fn forest_coloring_has_no_two_connected_triple() {
    let dir = TempDir::new().unwrap();
    let o = kcr(dir.path(), &["coloring", "forest", "--n", "6", "--out", "forest.txt"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = kcr(dir.path(), &["arrow", "forest.txt", "--kappa", "2", "--m", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "none\n");
    // with κ = 1 a path segment is a witness
    let o = kcr(dir.path(), &["arrow", "forest.txt", "--kappa", "1", "--m", "3"]);
    assert!(stdout(&o).starts_with("color "));
}

#[test]
fn four_cycle_is_not_three_connected() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = kcr(dir.path(), &["connectivity", "c4.txt", "--kappa", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "false\nseparator: 1 3\n");
    let o = kcr(dir.path(), &["connectivity", "c4.txt"]);
    assert_eq!(stdout(&o), "2\n");
}

#[test]
fn malformed_input_exits_two_with_location() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("bad.txt"), "3 2\n0 1\n1 one\n").unwrap();
    let o = kcr(dir.path(), &["connectivity", "bad.txt", "--kappa", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("bad.txt:3:"), "{}", stderr(&o));

    fs::write(dir.path().join("col.txt"), "3 2\n0 1 0\n0 2 5\n1 2 1\n").unwrap();
    let o = kcr(dir.path(), &["arrow", "col.txt", "--kappa", "1", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("col.txt:3:"), "{}", stderr(&o));

    let o = kcr(dir.path(), &["coloring", "forest", "--n", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exhausted_budget_exits_three() {
    let dir = TempDir::new().unwrap();
    let o = kcr(
        dir.path(),
        &[
            "search", "--n", "6", "--m", "3", "--kappa", "3", "--colors", "2", "--budget", "5",
        ],
    );
    assert_eq!(o.status.code(), Some(3));
    let out: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["result"]["kind"], "unknown");
}

#[test]
fn search_reports_an_avoiding_coloring() {
    let dir = TempDir::new().unwrap();
    let o = kcr(
        dir.path(),
        &["search", "--n", "5", "--m", "3", "--kappa", "3", "--colors", "2"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let out: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["result"]["kind"], "avoiding");
    assert_eq!(out["result"]["coloring"]["colors"].as_array().unwrap().len(), 10);
    assert_eq!(out["workers"], 1);
    assert!(out["seed"].is_u64());
    assert!(out["tool_version"].is_string());
}

#[test]
fn cnf_model_round_trip() {
    let dir = TempDir::new().unwrap();
    let o = kcr(
        dir.path(),
        &[
            "cnf", "--n", "5", "--m", "3", "--kappa", "3", "--colors", "2", "--out", "five.cnf",
        ],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let dimacs = fs::read_to_string(dir.path().join("five.cnf")).unwrap();
    assert!(dimacs.contains("p cnf 20 40"));

    // two pentagons: pair {u, v} gets color 0 iff v - u is 1 or 4
    let mut lits = Vec::new();
    let mut pair = 0;
    for u in 0..5 {
        for v in u + 1..5 {
            let color = usize::from(!matches!(v - u, 1 | 4));
            for c in 0..2 {
                let var = (pair * 2 + c + 1) as i32;
                lits.push(if c == color { var } else { -var });
            }
            pair += 1;
        }
    }
    let line: Vec<String> = lits.iter().map(ToString::to_string).collect();
    fs::write(
        dir.path().join("good.model"),
        format!("s SATISFIABLE\nv {} 0\n", line.join(" ")),
    )
    .unwrap();
    let o = kcr(dir.path(), &["verify-model", "five.cnf", "good.model"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("verified"));

    // all pairs in color 0
    let mono: Vec<String> = (1..=20)
        .map(|v| if v % 2 == 1 { v } else { -v })
        .map(|l| l.to_string())
        .collect();
    fs::write(dir.path().join("bad.model"), format!("v {} 0\n", mono.join(" "))).unwrap();
    let o = kcr(dir.path(), &["verify-model", "five.cnf", "bad.model"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("rejected"));
}

#[test]
fn delta_mine_on_the_pairs_family() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("5\n");
    for a in 0..5 {
        for b in a + 1..5 {
            text.push_str(&format!("{a} {b} {a} {b}\n"));
        }
    }
    fs::write(dir.path().join("pairs.txt"), text).unwrap();
    let o = kcr(dir.path(), &["delta-mine", "pairs.txt", "--size", "5"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["indices"], serde_json::json!([0, 1, 2, 3, 4]));
    assert_eq!(report["row_roots"][2], serde_json::json!([2]));
}

#[test]
fn colorings_are_reproducible_from_the_seed() {
    let dir = TempDir::new().unwrap();
    let a = kcr(
        dir.path(),
        &["--seed", "7", "coloring", "random", "--n", "6", "--colors", "3"],
    );
    let b = kcr(
        dir.path(),
        &["--seed", "7", "coloring", "random", "--n", "6", "--colors", "3"],
    );
    let c = kcr(
        dir.path(),
        &["--seed", "8", "coloring", "random", "--n", "6", "--colors", "3"],
    );
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    let s = kcr(dir.path(), &["coloring", "sierpinski", "--lambda", "2"]);
    assert!(stdout(&s).starts_with("4 4\n0 1 2\n0 2 0\n"), "{}", stdout(&s));
    let o = kcr(
        dir.path(),
        &["coloring", "sierpinski", "--lambda", "3", "--shuffle", "--out", "s.txt"],
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let o = kcr(dir.path(), &["arrow", "s.txt", "--kappa", "3", "--m", "3"]);
    assert_eq!(stdout(&o), "none\n");
    let o = kcr(
        dir.path(),
        &[
            "coloring",
            "blowup",
            "--base",
            "s.txt",
            "--blocks",
            "1,2,1,1,1,1,1,1",
            "--inner",
            "0",
        ],
    );
    assert!(stdout(&o).starts_with("9 6\n"), "{}", stdout(&o));
}

#[test]
fn replay_reverifies_and_detects_tampering() {
    let dir = TempDir::new().unwrap();
    fs::write(dir.path().join("c4.txt"), "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    kcr(
        dir.path(),
        &["number", "--m", "3", "--kappa", "2", "--colors", "2", "--nmax", "6"],
    );
    kcr(dir.path(), &["connectivity", "c4.txt", "--kappa", "2"]);
    kcr(dir.path(), &["coloring", "random", "--n", "5", "--colors", "2"]);
    let o = kcr(dir.path(), &["replay"]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with(" ok")).count(), 3);

    // a changed input file is reported rather than silently re-run
    fs::write(dir.path().join("c4.txt"), "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let o = kcr(dir.path(), &["replay", "--line", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("input changed"));

    // a forged digest is caught
    let store = dir.path().join("results.jsonl");
    let text = fs::read_to_string(&store).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut m: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    m["digest"] = serde_json::Value::String("0".repeat(64));
    lines[0] = m.to_string();
    fs::write(&store, lines.join("\n") + "\n").unwrap();
    let o = kcr(dir.path(), &["replay", "--line", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("MISMATCH"));
}
