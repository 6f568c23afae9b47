use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use chordfactor::named;
use chordfactor_cli::text::{format_rotation, parse_documents};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_chordfactor"));
    c.env_remove("CHORDFACTOR_MAX_BRUTE");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn verdicts(text: &str) -> Vec<String> {
    parse_documents(text).unwrap().iter().filter_map(|d| d.get("verdict").map(str::to_string)).collect()
}

#[test]
fn chord_on_k4_is_a_four_cycle_with_its_chord() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", &format_rotation(&named::k4()));
    let o = run(&["chord", "--edge", "1,2", &k4]);
    assert_eq!(o.status.code(), Some(0));
    let docs = parse_documents(&stdout(&o)).unwrap();
    assert_eq!(docs.len(), 1);
    let d = &docs[0];
    assert_eq!(d.get("verdict"), Some("chorded-2factor"));
    assert_eq!(d.get("edge"), Some("1-2"));
    assert_eq!(d.get("cycles").unwrap().split_whitespace().count(), 4);
    assert!(!d.get("two_factor").unwrap().split_whitespace().any(|e| e == "1-2"));
}

#[test]
fn classify_on_the_theta_graph_has_no_separating_matching() {
    let dir = tempfile::tempdir().unwrap();
    let theta = write(dir.path(), "theta.txt", &format_rotation(&named::theta()));
    for k in 1..=3 {
        let edge = format!("1,2/{k}");
        let o = run(&["classify", "--question", "separating", "--edge", &edge, &theta]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(verdicts(&stdout(&o)), ["no-separating-pm"]);
    }
}

#[test]
fn four_sided_suite_passes() {
    let o = run(&["verify", "--suite", "lemma4sides"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict: pass"));
}

#[test]
fn every_emitted_document_rechecks() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.pc");
    let o = run(&["enum", "--n", "8", "--format", "planar_code", "--out", tri.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(fs::read(&tri).unwrap().starts_with(b">>planar_code<<"));
    let cubic = dir.path().join("cubic.txt");
    assert_eq!(run(&["dual", tri.to_str().unwrap(), "--out", cubic.to_str().unwrap()]).status.code(), Some(0));
    let first = parse_documents(&fs::read_to_string(&cubic).unwrap()).unwrap()[0].graph().unwrap();
    let one = write(dir.path(), "one.txt", &format_rotation(&first));
    let around: Vec<_> = first.neighbors(0).iter().map(|v| format!("1-{}", v + 1)).collect();
    let pair = format!("{},{}", around[0], around[1]);
    let mut all = String::new();
    for args in [
        vec!["color", tri.to_str().unwrap()],
        vec!["chord", cubic.to_str().unwrap()],
        vec!["seppm", cubic.to_str().unwrap()],
        vec!["classify", cubic.to_str().unwrap()],
        vec!["samecycle", "--edges", &pair, "--facial", &one],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        all.push_str(&stdout(&o));
    }
    let witness = write(dir.path(), "all.txt", &all);
    let o = run(&["verify", "--witness", &witness]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("failed"));
}

#[test]
fn tampered_witness_is_a_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", &format_rotation(&named::k4()));
    let doc = stdout(&run(&["chord", "--edge", "1,2", &k4]));
    let bad = doc.replace("1-3 1-4", "1-2 1-4");
    assert_ne!(doc, bad);
    let w = write(dir.path(), "bad.txt", &bad);
    assert_eq!(run(&["verify", "--witness", &w]).status.code(), Some(1));
}

#[test]
fn jobs_do_not_change_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("tri.txt");
    run(&["enum", "--n", "9", "--out", tri.to_str().unwrap()]);
    let cubic = dir.path().join("cubic.txt");
    run(&["dual", tri.to_str().unwrap(), "--out", cubic.to_str().unwrap()]);
    let one = run(&["classify", "--jobs", "1", cubic.to_str().unwrap()]);
    let four = run(&["classify", "--jobs", "4", cubic.to_str().unwrap()]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(four.status.code(), Some(0));
    assert_eq!(verdicts(&stdout(&one)), verdicts(&stdout(&four)));
    assert!(!verdicts(&stdout(&one)).is_empty());
}

#[test]
fn planar_code_and_text_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let pc = dir.path().join("t.pc");
    let txt = dir.path().join("t.txt");
    run(&["gen", "--n", "30", "--count", "3", "--seed", "7", "--format", "planar_code", "--out", pc.to_str().unwrap()]);
    run(&["gen", "--n", "30", "--count", "3", "--seed", "7", "--out", txt.to_str().unwrap()]);
    let a = stdout(&run(&["dual", pc.to_str().unwrap()]));
    let b = stdout(&run(&["dual", txt.to_str().unwrap()]));
    assert_eq!(a, b);
    assert_eq!(parse_documents(&a).unwrap().len(), 3);
}

#[test]
fn environment_overrides_the_oracle_cap() {
    let dir = tempfile::tempdir().unwrap();
    let theta = write(dir.path(), "theta.txt", &format_rotation(&named::theta()));
    let with = stdout(&run(&["classify", "--edge", "1,2/1", &theta]));
    assert!(with.contains("oracle: confirmed"));
    let o = bin().args(["classify", "--edge", "1,2/1", "--max-brute", "20", &theta]).env("CHORDFACTOR_MAX_BRUTE", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("oracle:"));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let junk = write(dir.path(), "junk.txt", "not a graph\n");
    assert_eq!(run(&["chord", &junk]).status.code(), Some(2));
    let k4 = write(dir.path(), "k4.txt", &format_rotation(&named::k4()));
    assert_eq!(run(&["chord", "--edge", "1,9", &k4]).status.code(), Some(2));
    assert_eq!(run(&["chord", "--edge", "1", &k4]).status.code(), Some(2));
    assert_eq!(run(&["color", &k4, "--format", "planar_code"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let trunc = write(dir.path(), "t.pc", ">>planar_code<<\u{4}\u{2}\u{3}");
    assert_eq!(run(&["dual", &trunc]).status.code(), Some(2));
    let toroidal = write(dir.path(), "c.txt", "2 4 5 | 1 3 6 | 2 4 7 | 1 3 8 | 1 6 8 | 2 7 5 | 3 8 6 | 4 5 7");
    assert_eq!(run(&["chord", &toroidal]).status.code(), Some(2));
}

#[test]
fn two_edge_cuts_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let ladder = write(dir.path(), "l.txt", &format_rotation(&named::circular_ladder(2)));
    let o = run(&["chord", &ladder]);
    assert_eq!(o.status.code(), Some(0));
    assert!(verdicts(&stdout(&o)).iter().all(|v| v == "in-2-edge-cut" || v == "chorded-2factor"));
    assert!(verdicts(&stdout(&o)).iter().any(|v| v == "in-2-edge-cut"));
}
