use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_sgspec"));
    c.env_remove("SGSPEC_MAX_N");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sgspec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

const K3_NEG: &str = r#"{"format":"sgjson/1","kind":"signed","n":3,"edges":[[0,1,-1],[0,2,-1],[1,2,-1]]}"#;

#[test]
fn code_params_prints_the_formula() {
    let o = run(&["code", "params", "--alpha", "2/5", "--beta", "-1/5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), r#"{"lambda":"1","p":3,"formula":"3d+O(1)"}"#);
}

#[test]
fn analyze_reports_chi_and_multiplicity() {
    let f = scratch("k3.json", K3_NEG);
    let o = run(&["analyze", f.to_str().unwrap(), "--lambda", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("\"chi\":3"), "{text}");
    assert!(text.contains("\"multiplicity\":2"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["analyze", "/nonexistent/graph.json"]).status.code(), Some(2));
    let bad = scratch("bad.json", r#"{"n":3}"#);
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["code", "params", "--alpha", "1/2", "--beta", "3/4"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-claim"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_3() {
    let o = run(&["search", "kp", "--lambda", "sqrt(3)", "-p", "3", "--max-n", "9"]);
    assert_eq!(o.status.code(), Some(3));
    let o = bin()
        .env("SGSPEC_MAX_N", "4")
        .args(["search", "k", "--lambda", "1", "--max-n", "5"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["--limit-n", "4", "search", "k", "--lambda", "1", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_output_is_stable_across_jobs() {
    let args = ["search", "kp", "--lambda", "sqrt(3)", "-p", "3", "--max-n", "7"];
    let one = bin().args(["--jobs", "1"]).args(args).output().unwrap();
    let many = bin().args(["--jobs", "4"]).args(args).output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(json(&one)["value"], "7/3");
}

#[test]
fn verify_exit_code_follows_the_verdict() {
    let o = run(&["verify", "asymmetric6-charpoly"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "PASS");
    let o = run(&["verify", "gallery-all"]);
    assert_eq!(json(&o)["verdict"], "FAIL");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn replay_accepts_genuine_and_rejects_forged_reports() {
    let o = run(&["verify", "kp-values"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let good = scratch("kp.json", &text);
    assert_eq!(run(&["verify", "--replay", good.to_str().unwrap()]).status.code(), Some(0));
    let forged = scratch("kp-forged.json", &text.replacen("\"value\":\"7/3\"", "\"value\":\"2\"", 1));
    assert_ne!(text, std::fs::read_to_string(&forged).unwrap());
    assert_eq!(run(&["verify", "--replay", forged.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn code_build_and_check_round_trip() {
    let o = run(&["code", "build", "--alpha", "2/5", "--beta", "-1/5", "-d", "20", "--named", "complete_negative:3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!((v["N"].as_u64(), v["rank"].as_u64(), v["ell"].as_u64()), (Some(51), Some(19), Some(17)));
    assert_eq!(v["psd"], "certified");

    let w = scratch("w.json", K3_NEG);
    let o = run(&["code", "build", "--alpha", "2/5", "--beta", "-1/5", "-d", "3", "--witness", w.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    let empty = scratch("e3.json", r#"{"format":"sgjson/1","kind":"plain","n":3,"edges":[]}"#);
    let check = |d: &str| run(&["code", "check", "--alpha", "2/5", "--beta", "-1/5", "-d", d, empty.to_str().unwrap()]);
    let o = check("3");
    assert_eq!((o.status.code(), json(&o)["realizable"].as_bool()), (Some(0), Some(true)));
    let o = check("2");
    assert_eq!((o.status.code(), json(&o)["realizable"].as_bool()), (Some(1), Some(false)));
}

#[test]
fn gallery_lists_named_constructions() {
    let o = run(&["gallery", "h3_hat", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["graph"]["n"], 7);
    assert_eq!(run(&["gallery", "clebsch", "--verify"]).status.code(), Some(1));
}
