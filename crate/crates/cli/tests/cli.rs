use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const TANGENT_CONICS: &str = "(y^2-2*x*y+z^2)*(y^2+4*x*y+z^2)";

fn jacsyz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacsyz")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_jacsyz"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = jacsyz(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn text(args: &[&str]) -> String {
    let out = jacsyz(args);
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn analyze_free_arrangement() {
    let v = json(&["analyze", "x*y*z*(x-y)*(y-z)*(x-z)"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "analyze");
    assert_eq!(v["classification"], "free");
    assert_eq!(v["exponents"], serde_json::json!([2, 3]));
    assert_eq!(v["mdr"], 2);
    assert_eq!(v["sigma"], "inf");
    assert_eq!(v["nu"], 0);
}

#[test]
fn analyze_smooth_cubic() {
    let v = json(&["analyze", "x^3+y^3+z^3"]);
    assert_eq!(v["tau"], 0);
    assert_eq!(v["classification"], "m_syzygy");
    assert_eq!(v["m"], 3);
}

#[test]
fn analyze_two_lines() {
    let v = json(&["analyze", "x*y", "--field", "q"]);
    assert_eq!(v["exponents"], serde_json::json!([0, 1]));
    assert_eq!(v["field"], "q");
}

#[test]
fn text_and_json_agree() {
    let f = "x*y^3+z^4";
    let v = json(&["analyze", f]);
    let t = text(&["analyze", f]);
    assert!(t.contains(&format!("tau: {}", v["tau"])), "{t}");
    assert!(t.contains(&format!("classification: {}", v["classification"].as_str().unwrap())));
}

#[test]
fn input_errors_exit_with_one() {
    for args in [
        vec!["analyze", "x^2"],
        vec!["analyze", "x^2+"],
        vec!["analyze", "x+i*y", "--field", "q"],
        vec!["frobnicate"],
        vec!["union-line", "x*y*z", "--line", "0,1,0"],
        vec!["union-line", "x*y*z"],
        vec!["jumping", "x*y*z"],
        vec![],
    ] {
        let out = jacsyz(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(jacsyz(&["--help"]).status.code(), Some(0));
}

#[test]
fn union_line_verdicts() {
    let cases = [
        (TANGENT_CONICS, "y", "factor", 2),
        (TANGENT_CONICS, "y+z", "non_factor_ambiguous", 3),
        ("x*y^3+z^4", "y+z", "non_factor_decided_small_mdr", 2),
    ];
    for (f1, line, verdict, r) in cases {
        let v = json(&["union-line", f1, "--line", line]);
        assert_eq!(v["pencil"]["verdict"], verdict, "{f1} + {line}");
        assert_eq!(v["r"], r);
        assert_eq!(v["pencil"]["consistent"], true);
        assert_eq!(v["bounds_hold"], true);
    }
    let v = json(&["union-line", TANGENT_CONICS, "--line", "0,1,1"]);
    assert_eq!(v["union"]["exponents"], serde_json::json!([3, 3, 3, 3]));
    assert_eq!(v["union"]["tau"], 10);
}

#[test]
fn union_of_conics() {
    let cases = [
        ("x^2+y^2-z^2", "x^2+2*y^2-3*z^2", 2),
        ("y*z-x^2", "y*z-x^2+y^2+y*z", 2),
        ("x^2-y^2-z^2", "x^2-y^2-4*z^2", 1),
        ("y*z-x^2", "y*z-x^2+x*y+y^2", 2),
        ("x*(x+y)+y*z-y^2", "x*(x+y)+y*z+y^2", 1),
    ];
    for (f1, f2, r) in cases {
        let v = json(&["union", f1, f2, "--assume-qh"]);
        assert_eq!(v["union"]["mdr"], r, "{f1}, {f2}");
        assert_eq!(v["hypothesis_violated"], false);
    }
}

#[test]
fn union_exact_sequence_rows() {
    let v = json(&["union", "x*y*z", "x*y+y*z+x*z", "--exactseq", "1..2"]);
    let rows = v["cohom"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["k"], 2);
    assert_eq!(rows[1]["dims"][1], 2);
    assert!(rows.iter().all(|r| r["exact"] == true));
}

#[test]
fn broken_hypothesis_exits_with_two() {
    let out = jacsyz(&["union-line", "x*y^3+z^4", "--line", "y+z", "--assume-qh"]);
    assert_eq!(out.status.code(), Some(2));
    let out = jacsyz(&["union-line", "x*y^3+z^4", "--line", "y+z"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn jumping_scans() {
    let v = json(&["jumping", "x^2*y+z^3", "--scan", "10"]);
    let lines: Vec<&str> = v["jumping_lines"].as_array().unwrap().iter().map(|l| l.as_str().unwrap()).collect();
    assert!(lines.contains(&"x") && lines.contains(&"y"), "{lines:?}");
    let certs = v["certificates"].as_array().unwrap();
    assert!(certs.iter().any(|c| c["line"] == "x" && c["verified"] == true));

    let v = json(&["jumping", "x*y*z*(x-y)*(y-z)*(x-z)", "--scan", "50"]);
    assert_eq!(v["jumping_lines"], serde_json::json!([]));
    assert_eq!(v["generic"], serde_json::json!([2, 3]));

    let v = json(&["jumping", "x*y*z*(x-y)*(y-z)*(x-z)", "--line", "1,2,3"]);
    assert_eq!(v["lines"][0]["kfl"], "inf");
}

#[test]
fn batch_mode() {
    let input = "analyze \"x*y*z\"\n# comment\n\njumping \"x^2*y+z^3\" --line x\nanalyze \"x^2\"\n";
    let out = with_stdin(&["--batch", "--json"], input);
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    let reports: Vec<Value> = serde_json::Deserializer::from_str(&stdout)
        .into_iter()
        .collect::<Result<_, _>>()
        .unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["classification"], "free");
    assert_eq!(reports[1]["command"], "jumping");

    let out = with_stdin(&["--batch"], "analyze x*y\n");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("classification: free"));
}

#[test]
fn out_file() {
    let path = std::env::temp_dir().join(format!("jacsyz-out-{}.json", std::process::id()));
    let path_str = path.to_str().unwrap();
    let out = jacsyz(&["analyze", "x*y*z", "--json", "--out", path_str]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["classification"], "free");
    std::fs::remove_file(path).unwrap();
}
