use nonintegrability::algebra::rational::rat;
use nonintegrability::report::{run_analysis, run_sweep, AnalysisRequest, SweepSpec, TestName};

#[test]
fn diagonal_points_differ_in_sub_case() {
    let base = AnalysisRequest::new(["0", "0", "1", "3", "0", "0", "0"]).with_tests(&[TestName::Theorem]);
    let res = run_sweep(&SweepSpec::new(base).axis("A=1,2").unwrap().axis("B=1,2").unwrap()).unwrap();
    let summaries: Vec<&str> = res.reports.iter().map(|r| r.summary.as_str()).collect();
    assert_eq!(
        summaries,
        ["Inconclusive(c.0)", "NonIntegrable(c.02)", "NonIntegrable(c.02)", "Inconclusive(c.0)"]
    );
    assert_eq!(res.summary["Inconclusive"], 2);
    assert_eq!(res.summary["NonIntegrable"], 2);
}

#[test]
fn only_quarter_resonance_passes_the_gate() {
    let base = AnalysisRequest::new(["1", "1", "1", "1", "16", "0", "1"]).with_tests(&[TestName::Gate]);
    let res = run_sweep(&SweepSpec::new(base).with_p("1/2,1/3,1/4").unwrap()).unwrap();
    let fired: Vec<bool> = res
        .reports
        .iter()
        .map(|r| r.test(TestName::Gate).unwrap().outcome == "NonIntegrable")
        .collect();
    assert_eq!(fired, [false, false, true]);
}

#[test]
fn sweeps_are_ordered_and_repeatable() {
    let base = AnalysisRequest::new(["1", "1", "1", "1", "1", "6", "1"]).with_tests(&[TestName::Theorem]);
    let spec = SweepSpec::new(base).axis("C=-1:1/2:1").unwrap().axis("D=0,1,3").unwrap();
    let (a, b) = (run_sweep(&spec).unwrap(), run_sweep(&spec).unwrap());
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.reports.len(), 15);
    assert_eq!(a.reports[1].request.params.d, "1");
    assert_eq!(a.reports[3].request.params.c, "-1/2");
}

/// Along `16A = B` the equation derived from `C = 16, D = 3` loses its
/// logarithm; along `16A = 5B` it keeps it. Both disagree with the
/// printed locus and the report says so.
#[test]
fn log_locus_for_the_third_cubic() {
    for k in 1..=4 {
        let a = rat(k, 3);
        let on = [a.clone(), a.clone() * rat(16, 1), a.clone() * rat(16, 5)];
        for (i, b) in on[1..].iter().enumerate() {
            let p = [a.to_string(), b.to_string(), "16".into(), "3".into(), "0".into(), "0".into(), "0".into()];
            let p: [&str; 7] = std::array::from_fn(|j| p[j].as_str());
            let r = run_analysis(&AnalysisRequest::new(p).with_tests(&[TestName::Log])).unwrap();
            let log = r.test(TestName::Log).unwrap();
            let xi11 = log.witnesses.iter().find(|w| w.label.starts_with("xi11")).unwrap();
            if i == 0 {
                assert_eq!(xi11.value, "0", "16A = B at A = {a}");
            } else {
                assert_ne!(xi11.value, "0", "16A = 5B at A = {a}");
            }
            // the printed locus disagrees on both lines
            assert!(r.paper_discrepancies.iter().any(|d| d.topic.starts_with("logarithm")));
        }
    }
}
