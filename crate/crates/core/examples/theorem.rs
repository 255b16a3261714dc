//! Classifies the quartic part and runs the case analysis on a handful of
//! explicit Hamiltonians, one per family.
//!
//! `cargo run --example theorem`

use nonintegrability::algebra::rational::parse_rational;
use nonintegrability::algebra::Rational;
use nonintegrability::obstructions::{classify_quartic, theorem_evaluator};
use nonintegrability::variational::HamiltonianParams;

const POINTS: &[[&str; 7]] = &[
    ["1", "2", "1", "3", "0", "0", "0"],
    ["1", "2", "16", "3", "0", "0", "0"],
    ["5", "16", "16", "3", "0", "0", "0"],
    ["1", "2", "1", "1", "1", "6", "1"],
    ["1", "1", "1", "1", "1", "12", "16"],
    ["1", "1", "1", "1", "16", "12", "1"],
    ["1", "2", "1", "1", "1", "6", "8"],
    ["1", "1", "1", "1", "1", "1", "0"],
    ["1", "1", "1", "0", "1", "0", "1"],
    ["1", "1", "1", "1", "1", "12", "5"],
];

fn main() -> nonintegrability::Result<()> {
    for p in POINTS {
        let r: Vec<Rational> = p.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?;
        let class = classify_quartic(&r[4], &r[5], &r[6]);
        let v = theorem_evaluator(&HamiltonianParams::parse(p, Some("1"))?)?;
        println!("{:<32} {:<10} {v}", p.join(" "), class.to_string());
        for o in &v.obstructions {
            println!("    {}: {}", o.kind, o.label);
        }
        if let Some(n) = &v.note {
            println!("    note: {n}");
        }
    }
    Ok(())
}
