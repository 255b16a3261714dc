//! Parallel parameter sweeps: a small grid in `(A, B)` and a resonance
//! sweep that sets `F` from `p`.
//!
//! `cargo run --example sweep`

use nonintegrability::report::{run_sweep, AnalysisRequest, SweepSpec, TestName};

fn main() -> nonintegrability::Result<()> {
    let cubic = AnalysisRequest::new(["1", "1", "1", "3", "0", "0", "0"]).with_tests(&[TestName::Theorem]);
    let grid = SweepSpec::new(cubic).axis("A=1,2")?.axis("B=1,2")?;
    print!("{}", run_sweep(&grid)?.to_text());

    let quartic =
        AnalysisRequest::new(["1", "1", "1", "1", "16", "0", "1"]).with_tests(&[TestName::Branching, TestName::Gate]);
    let res = run_sweep(&SweepSpec::new(quartic).with_p("1/2,1/3,1/4")?)?;
    for r in &res.reports {
        let gate = r.test(TestName::Gate).expect("requested");
        println!("F = {:>5}: gate {}({})", r.request.params.f, gate.outcome, gate.case_id);
    }
    Ok(())
}
