//! The resonance parameter `p = sqrt(1 + 4F/E)` and the two tests built on
//! it: branching for irrational `p`, and the trace gate on `N(p)`.
//!
//! `cargo run --example resonance`

use nonintegrability::algebra::rational::{fmt_rational, parse_rational};
use nonintegrability::algebra::Sym;
use nonintegrability::obstructions::{branching_test, denominator_gate, f_for_resonance, resonance_parameter};
use nonintegrability::variational::HamiltonianParams;

fn main() -> nonintegrability::Result<()> {
    let e = parse_rational("16")?;
    for p in ["1/4", "1", "2", "1/2", "5/3", "7/5"] {
        let f = f_for_resonance(&e, &parse_rational(p)?);
        let params = HamiltonianParams::symbolic().with(Sym::E, e.clone()).with(Sym::F, f.clone());
        let rp = resonance_parameter(&params);
        println!("F = {:>6}  {rp}: gate {}", fmt_rational(&f), denominator_gate(&rp));
    }
    // 1 + 4 = 5 is not a square
    let irrational = HamiltonianParams::symbolic().with(Sym::E, 1).with(Sym::F, 1);
    let rp = resonance_parameter(&irrational);
    println!("E = F = 1  {rp}: branching {}", branching_test(&rp));
    Ok(())
}
