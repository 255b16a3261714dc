//! Full analysis of one Hamiltonian, printed as text and as JSON.
//!
//! `cargo run --example analyze -- 1 0 1 3 0 0 0`

use nonintegrability::report::{run_analysis, AnalysisRequest};

fn main() -> nonintegrability::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let params: [&str; 7] = match args.len() {
        7 => std::array::from_fn(|i| args[i].as_str()),
        // a cubic plane example with a level-3 obstruction
        _ => ["1", "0", "1", "3", "0", "0", "0"],
    };
    let req = AnalysisRequest::new(params);
    let report = run_analysis(&req)?;
    println!("{}", report.to_text());
    println!("{}", report.to_json());
    Ok(())
}
