use std::process::{Command, Output};

use serde_json::Value;

fn braid3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braid3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

#[test]
fn report_on_connected_sum_of_trefoils() {
    let o = braid3(&["report", "d a^2 b^2"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["xu"], "d^1 a^2 b^2");
    assert_eq!(r["garside"], "a^3 b^3");
    assert_eq!(r["sigma"], -4);
    assert_eq!(r["genus"], 2);
    assert_eq!(r["positivity"]["braid_positive"], true);
    assert_eq!(r["g4"]["exact"], true);
    assert!(r.get("unavailable").is_none());
}

#[test]
fn report_classifications() {
    let r = json(&braid3(&["report", "aB aB"]));
    assert_eq!(r["classification"]["class"], "FigureEight");
    assert_eq!(r["sigma"], 0);
    assert!(r.get("genus").is_none());
    assert_eq!(r["unavailable"]["genus"], "not_strongly_quasipositive");

    let r = json(&braid3(&["report", "d^4"]));
    assert_eq!(r["classification"]["class"], "Equal");
    assert_eq!(r["classification"]["family"], "T3Torus(4)");
}

#[test]
fn report_omits_knot_invariants_on_links() {
    let o = braid3(&["report", "a"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["components"], 2);
    for field in ["sigma", "genus", "classification", "g4"] {
        assert!(r.get(field).is_none(), "{field} present");
        assert_eq!(r["unavailable"][field], "not_a_knot");
    }
    let strict = braid3(&["--strict", "report", "a"]);
    assert_eq!(strict.status.code(), Some(3));
}

#[test]
fn nf_only_report() {
    let r = json(&braid3(&["report", "--nf-only", "aba"]));
    assert_eq!(r["xu"], "d^1 a");
    assert_eq!(r["garside"], "a^2 b");
    assert!(r.get("sigma").is_none());
    assert!(r.get("positivity").is_none());
}

#[test]
fn reports_are_deterministic() {
    let a = braid3(&["report", "d^3 a^2 b^2 x a b x"]);
    let b = braid3(&["report", "d^3 a^2 b^2 x a b x"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parse_errors_exit_2() {
    let o = braid3(&["nf", "a b q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte 4"));
    assert_eq!(braid3(&["same-link", "ab", "a^"]).status.code(), Some(2));
    assert_eq!(braid3(&["report", "a^2000000"]).status.code(), Some(2));
}

#[test]
fn same_link_verdicts() {
    let o = braid3(&["same-link", "a^4 b^3 x^5", "a^4 b^5 x^3"]);
    assert_eq!((stdout(&o).trim(), o.status.code()), ("same-link-not-conjugate", Some(0)));
    let o = braid3(&["same-link", "ab", "ba"]);
    assert_eq!((stdout(&o).trim(), o.status.code()), ("conjugate", Some(0)));
    let o = braid3(&["same-link", "d", "d^2"]);
    assert_eq!((stdout(&o).trim(), o.status.code()), ("different", Some(1)));
    let o = braid3(&["--json", "same-link", "ab", "AB"]);
    assert_eq!(json(&o)["relation"], "same-link-not-conjugate");
}

#[test]
fn classify_and_defect() {
    assert_eq!(stdout(&braid3(&["classify", "d^7"])).trim(), "Strict");
    assert_eq!(stdout(&braid3(&["classify", "D^5"])).trim(), "Equal(T3Torus(5) mirrored)");
    assert_eq!(braid3(&["classify", "a b^2 a"]).status.code(), Some(3));

    let o = braid3(&["defect", "d^5 a^2"]);
    let out = stdout(&o);
    assert!(out.starts_with("genus=5 sigma=-8 sigma_hat=8 defect=[0,1] g4top=[4,4] exact=true"), "{out}");
    assert!(out.contains("untwisting family delta-a"));
    let o = braid3(&["defect", "aB aB"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn trefoil_profile_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let jpath = dir.path().join("t.json");
    let o = braid3(&[
        "profile",
        "d^2",
        "--grid",
        "100",
        "--csv",
        csv.to_str().unwrap(),
        "--json-out",
        jpath.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sigma=-2 sigma_hat=2"));
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,sigma"));
    let mut rows = 0;
    for line in lines {
        let (t, s) = line.split_once(',').unwrap();
        assert_eq!(t.split_once('.').unwrap().1.len(), 6);
        let (t, s): (f64, i64) = (t.parse().unwrap(), s.parse().unwrap());
        assert_eq!(s, if t < 1.0 / 6.0 { 0 } else { -2 }, "row {line}");
        rows += 1;
    }
    assert_eq!(rows, 102);
    let profile: Value = serde_json::from_str(&std::fs::read_to_string(&jpath).unwrap()).unwrap();
    assert_eq!(profile["sigma_hat"], 2);
    assert_eq!(profile["arcs"].as_array().unwrap().len(), 2);
}

#[test]
fn k4_profile() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("k4.csv");
    let word = "a^2b^2 a^2b^2 a^2b^2 a^2b^2 a^2b^2 a^2b^2 a^2b^2 a^2b^2 a^5b^5 a^5b^5 a^5b^5 a^5b^5";
    let o = braid3(&["profile", word, "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sigma=-48 sigma_hat=52"));
}

#[test]
fn profile_of_a_link_fails() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("u.csv");
    let o = braid3(&["profile", "a", "--csv", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("closure has 2 components"));
    assert!(!csv.exists());
}
