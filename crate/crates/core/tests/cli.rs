use std::process::{Command, Output};

use nonintegrability::report::{run_analysis, AnalysisRequest, Format, Report, TestName};

fn nonint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonint")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

#[test]
fn inconclusive_runs_exit_zero() {
    let o = nonint(&["analyze", "1", "1", "1", "3", "0", "0", "0", "--tests", "theorem"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("summary: Inconclusive(c.0)"));
}

#[test]
fn malformed_input_exits_two() {
    for bad in [["1", "x"], ["1", "0.5"], ["1", "1/0"]] {
        let o = nonint(&["analyze", bad[0], bad[1], "1", "3", "0", "0", "0"]);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
    }
    let o = nonint(&["analyze", "1", "1", "1", "3", "0", "0", "0", "--order", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = nonint(&["analyze", "1", "1", "1", "3", "0", "0", "0", "--tests", "kovacic"]);
    assert_eq!(o.status.code(), Some(2));
    let o = nonint(&["analyze", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn repeated_roots_exit_three() {
    // z^3 - 3z^2 + 4 = (z - 2)^2 (z + 1)
    let o = nonint(&["analyze", "1", "-3", "1", "3", "0", "0", "0", "--h", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(3));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.errors[0].kind, "RepeatedRoots");
    assert_eq!(r.test(TestName::Log).unwrap().outcome, "Skipped");
    // the case analysis does not depend on h and still runs
    assert_eq!(r.summary, "NonIntegrable(c.02)");
}

#[test]
fn listed_reports() {
    let cases = [
        (["1", "2", "1", "3", "0", "0", "0"], "NonIntegrable(c.02)"),
        (["1", "2", "1", "0", "1", "0", "1"], "Separable(separable)"),
        (["1", "2", "1", "3", "1", "1", "0"], "NonIntegrable(a)"),
    ];
    for (p, want) in cases {
        let mut args = vec!["analyze"];
        args.extend(p);
        args.extend(["--tests", "branching,gate,theorem"]);
        let o = nonint(&args);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(&format!("summary: {want}")), "{p:?}");
    }
}

#[test]
fn json_matches_the_library_and_repeats() {
    let args = ["analyze", "1", "2", "16", "3", "0", "0", "0", "--format", "json"];
    let (a, b) = (nonint(&args), nonint(&args));
    assert_eq!(a.stdout, b.stdout);
    let parsed = Report::from_json(&stdout(&a)).unwrap();
    let mut req = AnalysisRequest::new(["1", "2", "16", "3", "0", "0", "0"]);
    req.format = Format::Json;
    assert_eq!(parsed, run_analysis(&req).unwrap());
    assert!(parsed.test(TestName::Log).is_some());
}

#[test]
fn zero_energy_is_refused_for_residues() {
    let o = nonint(&["analyze", "1", "0", "1", "3", "0", "0", "0", "--h", "0", "--tests", "residue2,residue3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("energy level h = 0 refused").count(), 2, "{text}");
    assert!(!text.contains("error"));
}

#[test]
fn frobenius_subcommand() {
    // Bessel of order zero: x^2 y'' + x y' + x^2 y = 0
    let o = nonint(&["frobenius", "--c1", "1", "--c1-den", "0;1", "--c2", "1", "--order", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exponents"], serde_json::json!(["0", "0"]));
    assert_eq!(v["verified"], serde_json::json!(true));
    let o = nonint(&["frobenius", "--c1", "1", "--c1-den", "0;1", "--c2", "1/0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_subcommand() {
    let o = nonint(&[
        "sweep", "1", "1", "1", "3", "0", "0", "0", "--axis", "A=1,2", "--axis", "B=1,2", "--tests", "theorem",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with('[')).count(), 4);
    assert!(text.contains("Inconclusive: 2") && text.contains("NonIntegrable: 2"));
    let o = nonint(&["sweep", "1", "1", "1", "3", "0", "0", "0", "--axis", "A="]);
    assert_eq!(o.status.code(), Some(2));
}
