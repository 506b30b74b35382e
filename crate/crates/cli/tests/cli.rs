use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fracramsey"));
    c.env_remove("FRACRAMSEY_BUDGET");
    c
}

fn file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> (Output, Value) {
    let out = bin().args(args).output().unwrap();
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out, json)
}

#[test]
fn check_diamond() {
    let g = file("C^\n");
    let (out, j) = run(&["check", "--r", "2", g.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["member"], true);
    assert_eq!(j["minimal"], true);
    assert_eq!(j["certificate"]["kind"], "violating_subgraph");
}

#[test]
fn check_non_member_is_exit_one_with_colouring() {
    let g = file("0 1\n1 2\n2 3\n3 0\n");
    let (out, j) = run(&["check", "--r", "2", g.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(j["member"], false);
    assert_eq!(j["certificate"]["kind"], "good_colouring");
}

#[test]
fn colour_then_verify_round_trip() {
    let g = file("0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n");
    let path = g.path().to_str().unwrap();
    let out = bin().args(["--format", "text", "colour", "--r", "2", path]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let c = file(std::str::from_utf8(&out.stdout).unwrap());
    let out = bin().args(["--format", "text", "verify", "--r", "2", path, c.path().to_str().unwrap()]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "none");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_c4() {
    let g = file("0 1\n1 2\n2 3\n3 0\n");
    let good = file("0 1 1\n1 2 2\n2 3 3\n0 3 1\n");
    let (out, j) = run(&["verify", "--r", "2", g.path().to_str().unwrap(), good.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(j, "none");
    let bad = file("0 1 1\n1 2 2\n2 3 2\n0 3 1\n");
    let (out, j) = run(&["verify", "--r", "2", g.path().to_str().unwrap(), bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["cycle"].as_array().unwrap().len(), 4);
}

#[test]
fn number_exact_and_bounds() {
    let (out, j) = run(&["number", "--r", "2", "--n", "3", "--exact"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["exact"], 5);
    assert_eq!(j["upper_recursive"], 5);
    assert_eq!(j["witnesses"].as_array().unwrap().len(), 1);
    let (_, j) = run(&["number", "--r", "2", "--n", "2", "--bounds"]);
    assert_eq!(j["upper_closed"]["exact"], "601/64");
    assert!(j.get("exact").is_none());
}

#[test]
fn budget_exhaustion_is_exit_three() {
    let (out, j) = run(&["number", "--r", "2", "--n", "4", "--exact", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(j["exact"], Value::Null);
    let k7 = file("F~~~w\n");
    let out = bin()
        .args(["arrows", "--r", "2", "--n", "4", k7.path().to_str().unwrap()])
        .env("FRACRAMSEY_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--budget"));
}

#[test]
fn arrows_k5_and_k4() {
    let (out, j) = run(&["arrows", "--r", "2", "--n", "3", file("D~{\n").path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["arrows"], true);
    let (out, j) = run(&["arrows", "--r", "2", "--n", "3", file("C~\n").path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(j["colouring"]["colours"].as_array().unwrap().len(), 6);
}

#[test]
fn input_errors_are_exit_two() {
    let (out, _) = run(&["check", "--r", "2", "/nonexistent/graph.g6"]);
    assert_eq!(out.status.code(), Some(2));
    let (out, _) = run(&["check", "--r", "2", "--frobnicate", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let bad = file("0 0\n");
    let (out, _) = run(&["check", "--r", "2", bad.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let (out, _) = run(&["generate", "planar", "--r", "2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn transforms() {
    let d = file("C^\n");
    let p = d.path().to_str().unwrap();
    let (out, j) = run(&["transform", "blowup", p, "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["two_connected"], true);
    assert_eq!(j["graph"]["edges"].as_array().unwrap().len(), 8);
    let (_, j) = run(&["transform", "contract", p]);
    assert_eq!(j["parallels_merged"], true);
    let (_, j) = run(&["transform", "cone", p, "--k", "2"]);
    assert_eq!(j["graph"]["vertices"].as_array().unwrap().len(), 6);
    let (_, j) = run(&["transform", "subdivide", p, "--edge", "0", "2"]);
    assert_eq!(j["graph"]["edges"].as_array().unwrap().len(), 6);
    let (out, _) = run(&["transform", "subdivide", p, "--r", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_and_minimize() {
    let (out, j) = run(&["generate", "planar", "--r", "3", "--n", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["graph"]["edges"].as_array().unwrap().len(), 11);
    let (_, j) = run(&["generate", "oddfam", "--k", "2"]);
    assert_eq!(j["graph"]["vertices"].as_array().unwrap().len(), 7);
    let k5 = file("D~{\n");
    let (out, j) = run(&["minimize", "--r", "2", k5.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["graph"]["edges"].as_array().unwrap().len(), 5);
    let c5 = file("0 1\n1 2\n2 3\n3 4\n4 0\n");
    let (out, _) = run(&["minimize", "--r", "2", c5.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn selftest_runs_threaded() {
    let (out, j) = run(&["--threads", "2", "selftest", "--max-v", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(j["disagreements"].as_array().unwrap().len(), 0);
}
