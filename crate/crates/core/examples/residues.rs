//! Second- and third-variation residues for the cubic family.
//!
//! `cargo run --example residues`

use nonintegrability::algebra::Sym;
use nonintegrability::obstructions::{residue_obstruction, Chart};
use nonintegrability::variational::HamiltonianParams;

fn main() -> nonintegrability::Result<()> {
    let cubic = HamiltonianParams::symbolic()
        .with(Sym::C, 1)
        .with(Sym::D, 3)
        .with(Sym::E, 0)
        .with(Sym::F, 0)
        .with(Sym::G, 0);

    let l2 = residue_obstruction(&cubic, 2, Chart::SqrtWeight, 8)?;
    println!("level 2, {} (order {}, {} retries):", l2.chart, l2.order, l2.retries);
    for e in &l2.entries {
        println!("  {:<40} {}", e.label, e.residue);
    }

    let b0 = cubic.with(Sym::B, 0);
    let l3 = residue_obstruction(&b0, 3, Chart::TimeDomain, 12)?;
    println!("level 3 with B = 0, {} (order {}):", l3.chart, l3.order);
    for e in l3.nonzero() {
        println!("  {:<50} {}", e.label, e.residue);
    }
    println!("witness: {}", l3.witness());
    Ok(())
}
