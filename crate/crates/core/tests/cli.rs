use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn instances() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances")
}

fn inst(name: &str) -> String {
    instances().join(format!("{name}.inst")).to_string_lossy().into_owned()
}

fn usp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_usp")).args(args).output().expect("run usp")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// Writes `text` to a fresh file in the temp directory.
fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("usp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn delta_on_c4() {
    let o = usp(&["delta", &inst("c4")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("delta* classes: 2"));
}

#[test]
fn check_fig1_has_usp_without_square_property() {
    let o = usp(&["check", &inst("fig1")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("USP: yes; square property: no (witness square"));
}

#[test]
fn check_with_witness_and_budget() {
    let m8 = inst("m8");
    let o = usp(&["check", "--witness", &m8, "--budget", "1000", &m8]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("USP: yes; square property: yes"));
}

#[test]
fn check_rejects_a_discrete_path() {
    let f = scratch("p3.inst", "vertices a b c\nedge a b x\nedge b c y\n");
    let o = usp(&["check", &f]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("USP: no"));
}

#[test]
fn partitions_and_quotients_of_m8() {
    let o = usp(&["partitions", &inst("m8")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("P^R: {0,4} {1,5} {2,6} {3,7}"));
    assert!(out.contains("equitable: yes"));

    let o = usp(&["quotient", "--weighted", &inst("m8")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("B0 -> B0 weight 1"));

    let dot = scratch("m8q.dot", "");
    let o = usp(&["quotient", "--dot", &dot, &inst("m8")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&dot).unwrap().contains("B0 -- B0;"));
}

#[test]
fn decompose_and_factor_the_prism() {
    let o = usp(&["decompose", &inst("prism")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("factor HEX: 6 vertices, 6 edges, 0 loops"));

    let o = usp(&["factor", &inst("prism")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "C6 □ K2");

    let o = usp(&["factor", &inst("m8")]);
    assert_eq!(stdout(&o).trim(), "G(8,12)");
}

#[test]
fn verify_fixtures() {
    for name in ["c4", "fig1", "fig2", "fig3", "m8", "prism", "q3"] {
        let o = usp(&["verify", "--seed", "7", &inst(name)]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", stdout(&o));
        assert!(stdout(&o).contains(", 0 failed"), "{name}");
    }
}

#[test]
fn verify_json_lines_parse() {
    let o = usp(&["verify", "--json", &inst("c4")]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records[0]["record"], "instance");
    assert_eq!(records.last().unwrap()["record"], "summary");
    assert!(records.iter().filter(|r| r["record"] == "statement").all(|r| r["verdict"] != "fail"));
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(usp(&["frob"]).status.code(), Some(2));
    assert_eq!(usp(&["check"]).status.code(), Some(2));
    assert_eq!(usp(&["check", "/nonexistent/x.inst"]).status.code(), Some(2));
    let bad = scratch("bad.inst", "vertices a b\nedge a z\n");
    let o = usp(&["delta", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}
