use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;
use tempfile::TempDir;
use tripoly::cli::{poly_from_json, run, CliOutput, EXIT_GUARD, EXIT_INPUT, EXIT_OK};
use tripoly::exactmath::PolyS;

const ABC: &str = "194939*s^14 + 338669*s^13 + 263615*s^12 + 119944*s^11 + 34773*s^10 + 6522*s^9 + 748*s^8 + 42*s^7";

fn tripoly(args: &[&str]) -> CliOutput {
    run(std::iter::once("tripoly").chain(args.iter().copied()))
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path
}

struct Files {
    _dir: TempDir,
    ea: String,
    eb: String,
    ec: String,
    region: String,
    big: String,
    bad: String,
    out: String,
}

fn files() -> Files {
    let dir = TempDir::new().unwrap();
    let p = |name: &str, body: &str| write(dir.path(), name, body).display().to_string();
    Files {
        ea: p("ea.pts", "0 0\n1 1\n2 -1\n3 1\n4 -1\n5 0\n"),
        eb: p("eb.pts", "0 0\n1 1\n2 -1\n3 1\n4 0\n"),
        ec: p("ec.pts", "# E_c\n0 0\n1 2\n2 1\n3 -1\n4 1\n5 0\n"),
        region: p("region.pts", "2 0\n0 3\n0 1\n1 3\n1 2\n1 1\n2 2\n2 1\n"),
        big: p("big.pts", &(0..13).map(|i| format!("{i} {}\n", i * i)).collect::<String>()),
        bad: p("bad.pts", "0 0\n1 x\n"),
        out: dir.path().join("abc.pts").display().to_string(),
        _dir: dir,
    }
}

#[test]
fn documented_examples() {
    let f = files();
    let w = tripoly(&["weighted", "1", "5", "2", "3", "4", "--maximal"]);
    assert_eq!((w.code, w.stdout.as_str()), (EXIT_OK, "8046\n"));
    assert_eq!(tripoly(&["neargon", &f.ea, &f.eb, &f.ec]).stdout, format!("{ABC}\n"));
    let region = tripoly(&["region", &f.region, "--floor", "0,1,7", "--ceiling", "0,2,3,5,6,7"]);
    assert_eq!(region.stdout, "12*s^8 + 16*s^7 + 5*s^6\n");
    let oracle = tripoly(&["oracle-region", &f.region, "--floor", "0,1,7", "--ceiling", "0,2,3,5,6,7"]);
    assert_eq!(oracle.stdout, region.stdout);
}

#[test]
fn edge_verbs() {
    let f = files();
    let want = "(10*p_3 + 7*p_4 + 2*p_5)*s^5 + (3*p_2 + 13*p_3 + 4*p_4)*s^4 + (6*p_2 + 3*p_3)*s^3 + (1*p_1 + 1*p_2)*s^2\n";
    assert_eq!(tripoly(&["edgepoly-tm", &f.ec]).stdout, want);
    for method in ["auto", "tm", "roofs"] {
        assert_eq!(tripoly(&["edgepoly", &f.ec, "--method", method]).stdout, want, "{method}");
    }
    let convex = tripoly(&["edgepoly", &f.ec, "--method", "convex"]);
    assert_eq!(convex.code, EXIT_INPUT);
    assert_eq!(tripoly(&["edgepoly", &f.ec, "--maximal"]).stdout, "10*p_3 + 7*p_4 + 2*p_5\n");
    assert_eq!(tripoly(&["recover", "19", "87", "334", "--range", "3,5"]).stdout, "10*p_3 + 7*p_4 + 2*p_5\n");
    assert_eq!(tripoly(&["neargon", &f.ea, &f.eb, &f.ec, "--maximal"]).stdout, "194939\n");
}

#[test]
fn trace_lists_every_vector() {
    let f = files();
    let out = tripoly(&["edgepoly-tm", &f.ec, "--trace"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[6], "V_7 = 10*R_25 (0 [1 4] 5)");
    let json: Value = serde_json::from_str(&tripoly(&["edgepoly-tm", &f.ec, "--trace", "--json"]).stdout).unwrap();
    assert_eq!(json["trace"].as_array().unwrap().len(), 7);
}

#[test]
fn json_and_text_agree() {
    let f = files();
    for args in [vec!["weighted", "5", "4", "5"], vec!["neargon", &f.ea, &f.eb, &f.ec], vec!["poly", &f.region]] {
        let text = tripoly(&args);
        let mut with_json = args.clone();
        with_json.push("--json");
        let json: Value = serde_json::from_str(&tripoly(&with_json).stdout).unwrap();
        let from_json = poly_from_json(&json).unwrap();
        assert_eq!(from_json, text.stdout.trim().parse::<PolyS>().unwrap());
        assert!(json["terms"][0]["coeff"].is_string());
    }
    let json: Value = serde_json::from_str(&tripoly(&["maxcount", &f.region, "--json"]).stdout).unwrap();
    assert_eq!(json["count"], tripoly(&["maxcount", &f.region]).stdout.trim());
}

#[test]
fn output_is_deterministic() {
    let f = files();
    for args in [vec!["poly", f.ec.as_str(), "--trace"], vec!["weighted", "1", "5", "2", "3", "4", "--json"]] {
        assert_eq!(tripoly(&args), tripoly(&args));
    }
}

#[test]
fn realize_then_count() {
    let f = files();
    let out = tripoly(&["realize", &f.ea, &f.eb, &f.ec, "-o", &f.out]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.starts_with("14 points"));
    assert_eq!(tripoly(&["poly", &f.out]).stdout, format!("{ABC}\n"));
    assert_eq!(tripoly(&["oracle", &f.out, "--guard", "14"]).stdout, format!("{ABC}\n"));
}

#[test]
fn exit_codes_and_diagnostics() {
    let f = files();
    let guard = tripoly(&["oracle", &f.big]);
    assert_eq!(guard.code, EXIT_GUARD);
    assert!(guard.stderr.contains("guard"));
    let missing = tripoly(&["poly", "/nonexistent/points.pts"]);
    assert_eq!(missing.code, EXIT_INPUT);
    assert!(missing.stderr.contains("/nonexistent/points.pts"));
    let parse = tripoly(&["poly", &f.bad]);
    assert_eq!(parse.code, EXIT_INPUT);
    assert!(parse.stderr.contains("line 2"), "{}", parse.stderr);
    let verb = tripoly(&["frobnicate"]);
    assert_eq!(verb.code, EXIT_INPUT);
    assert!(verb.stderr.contains("Usage"));
    assert_eq!(tripoly(&["weighted", "3", "--bogus"]).code, EXIT_INPUT);
    assert_eq!(tripoly(&["--help"]).code, EXIT_OK);
    let crossing = tripoly(&["region", &f.region, "--floor", "0,2,3,5,6,7", "--ceiling", "0,1,7"]);
    assert_eq!(crossing.code, EXIT_INPUT);
}

#[test]
fn selftest_reports_each_example() {
    let out = tripoly(&["selftest"]);
    let failing: Vec<&str> = out.stdout.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert!(out.stdout.lines().filter(|l| l.starts_with("PASS")).count() > 50);
    assert_eq!(out.code, if failing.is_empty() { EXIT_OK } else { EXIT_INPUT });
    let json: Value = serde_json::from_str(&tripoly(&["selftest", "--json"]).stdout).unwrap();
    assert_eq!(json["failed"].as_u64().unwrap() as usize, failing.len());
}
