//! End-to-end runs of the `satgames` binary on the fixtures directory.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satgames")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn failure(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let err = serde_json::from_slice(&out.stderr).unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), err)
}

fn satisfactions(v: &Value) -> Vec<String> {
    v["satisfaction"].as_array().unwrap().iter().map(|r| r["satisfaction"].as_str().unwrap().to_string()).collect()
}

#[test]
fn spread_rounds() {
    let chain = fixture("chain.json");
    let v = json(&["spread", &chain, "--seeds", "1,2"]);
    assert_eq!(v["rounds"], serde_json::json!([[1, 2], [0, 1, 2], [0, 1, 2, 4]]));
    let v = json(&["spread", &chain]);
    assert_eq!(v["rounds"], serde_json::json!([[]]));
    let v = json(&["spread", &chain, "--seeds", "0,1,2,3,4"]);
    assert_eq!(v["rounds"].as_array().unwrap().len(), 1);
}

#[test]
fn star_center_uses_star_engine() {
    let star = fixture("star.json");
    let auto = json(&["satisfaction", &star, "--actor", "6"]);
    assert_eq!(auto["engine"], "star");
    let brute = json(&["satisfaction", &star, "--actor", "6", "--engine", "bruteforce"]);
    assert_eq!(auto["satisfaction"], brute["satisfaction"]);
}

#[test]
fn engines_agree() {
    let star = fixture("star.json");
    for model in ["oblivious", "nonoblivious"] {
        let a = json(&["satisfaction", &star, "--model", model, "--engine", "star"]);
        let b = json(&["satisfaction", &star, "--model", model, "--engine", "bruteforce"]);
        assert_eq!(satisfactions(&a), satisfactions(&b), "{model}");
    }
    let layered = fixture("layered.json");
    for model in ["oblivious", "nonoblivious"] {
        let a = json(&["satisfaction", &layered, "--model", model, "--engine", "hierarchical"]);
        let b = json(&["satisfaction", &layered, "--model", model, "--engine", "bruteforce"]);
        assert_eq!(satisfactions(&a), satisfactions(&b), "{model}");
    }
    let a = json(&["expansion", &layered, "--all", "--engine", "hierarchical"]);
    let b = json(&["expansion", &layered, "--all", "--engine", "bruteforce"]);
    assert_eq!(a["counts"], b["counts"]);
    assert_eq!(a["total"], "128");
}

#[test]
fn follower_in_oblivious_model_gets_half() {
    let v = json(&["satisfaction", &fixture("chain.json"), "--actor", "4"]);
    assert_eq!(v["satisfaction"], "16");
}

#[test]
fn golf_model_is_accepted() {
    let v = json(&["satisfaction", &fixture("golf.json")]);
    assert_eq!(v["model"], "golf");
    let b = json(&["satisfaction", &fixture("golf.json"), "--engine", "bruteforce"]);
    assert_eq!(satisfactions(&v), satisfactions(&b));
    let d = json(&["decide", &fixture("golf.json"), "--yes", "1,2"]);
    assert_eq!(d["final"], serde_json::json!([0, 1, 2]));
    assert_eq!(d["decision"], 1);
}

#[test]
fn hierarchical_engine_names_offending_vertex() {
    let (code, err) = failure(&["satisfaction", &fixture("star.json"), "--engine", "hierarchical"]);
    assert_eq!(code, 3);
    assert_eq!(err["error"]["kind"], "engine-inapplicable");
    assert!(err["error"]["message"].as_str().unwrap().contains("vertex"), "{err}");
}

#[test]
fn dictator_indices() {
    let v = json(&["indices", &fixture("dictator.json")]);
    let rows: Vec<(u64, &str, &str, &str)> = v["actors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["actor"].as_u64().unwrap(),
                r["satisfaction"].as_str().unwrap(),
                r["rae"].as_str().unwrap(),
                r["banzhaf"].as_str().unwrap(),
            )
        })
        .collect();
    assert_eq!(rows, vec![(0, "4", "4", "2"), (1, "2", "2", "0")]);
}

#[test]
fn star_indices_keep_rae_minus_banzhaf_constant() {
    let csv = stdout(&["--format", "csv", "indices", &fixture("star.json")]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("actor,satisfaction,rae,banzhaf"));
    for line in lines {
        let f: Vec<u64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(f[2] - f[3], 128, "{line}");
        assert_eq!(f[1], f[2]);
    }
}

#[test]
fn star_expansion_buckets() {
    let v = json(&["expansion", &fixture("star.json"), "--all"]);
    let want: Vec<String> = [1, 6, 15, 10, 0, 3, 12, 13, 4].iter().map(|c| (4 * c).to_string()).collect();
    assert_eq!(v["counts"], serde_json::json!(want));
    assert_eq!(v["total"], "256");
    let t = json(&["expansion", &fixture("star.json"), "--k", "7", "--trace-level"]);
    assert_eq!(t["count"], "13");
}

#[test]
fn gadget_for_path() {
    let v = json(&["gadget", &fixture("path3.txt")]);
    assert_eq!(v["k"], 13);
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), 14);
    assert_eq!(v["warnings"], serde_json::json!(["fewer-than-six-vertices"]));
    let mut indegree = [0usize; 14];
    for arc in v["graph"]["arcs"].as_array().unwrap() {
        indegree[arc[1].as_u64().unwrap() as usize] += 1;
    }
    assert!(indegree.iter().all(|&d| d == 0 || d == 3));
}

#[test]
fn output_is_deterministic() {
    let args = ["indices", &fixture("star.json")];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["recognize", &fixture("layered.json")];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn error_exit_codes() {
    let (code, err) = failure(&["satisfaction", &fixture("bad_label.json")]);
    assert_eq!(code, 2);
    assert!(err["error"]["message"].as_str().unwrap().contains("vertices[0].label"), "{err}");
    let (code, err) = failure(&["--cap", "4", "satisfaction", &fixture("star.json"), "--engine", "bruteforce"]);
    assert_eq!(code, 4);
    assert_eq!(err["error"]["kind"], "cap-exceeded");
    let (code, _) = failure(&["satisfaction", &fixture("star.json"), "--actor", "99"]);
    assert_eq!(code, 2);
    let (code, _) = failure(&["--format", "csv", "recognize", &fixture("star.json")]);
    assert_eq!(code, 2);
}

#[test]
fn recognize_reports_certificates() {
    let v = json(&["recognize", &fixture("star.json")]);
    assert_eq!(v["star"]["certified"], true);
    assert_eq!(v["star"]["shape"]["center"], 6);
    assert_eq!(v["hierarchical"]["certified"], false);
    let v = json(&["recognize", &fixture("layered.json")]);
    assert_eq!(v["hierarchical"]["certified"], true);
    assert_eq!(v["hierarchical"]["decomposition"]["kind"], "union");
}
