//! Indicial equations and Churchill invariants of the first variational
//! equation along the invariant plane, with every parameter symbolic.
//!
//! `cargo run --example churchill`

use nonintegrability::algebra::Sym;
use nonintegrability::ode::{churchill_invariants, indicial_at_infinity, indicial_finite_simple_root};
use nonintegrability::variational::{build_ve1_z, HamiltonianParams};

fn main() -> nonintegrability::Result<()> {
    let generic = HamiltonianParams::symbolic();
    let (ve, _) = build_ve1_z(&generic)?;
    println!("finite: {}", indicial_finite_simple_root(&ve)?);
    println!("infinity: {}", indicial_at_infinity(&ve)?);
    for (loc, inv) in churchill_invariants(&ve)? {
        println!("at {loc}:\n  a = {}, b = {}, Delta = {}, t = {}", inv.a, inv.b, inv.delta, inv.trace);
    }

    // 1 + 4F/E = 9, so p = 3 and the exponents at infinity are 2 and -1
    let square = generic.with(Sym::E, 1).with(Sym::F, 2);
    let (ve, _) = build_ve1_z(&square)?;
    println!("E = 1, F = 2: infinity {}", indicial_at_infinity(&ve)?);
    Ok(())
}
