//! Logarithm test at infinity for the cubic plane with `C/D = 16/3`.
//!
//! Runs the equation in two forms: as printed in the literature (with the
//! `x^-2` coefficient that reproduces the stated exponents) and as derived
//! from the Hamiltonian `C = 16, D = 3`.
//!
//! `cargo run --example log_obstruction`

use nonintegrability::algebra::{ParamScalar, Sym, Var};
use nonintegrability::obstructions::{
    commutator, families_commute, log_obstruction_test, unipotent_family, GaloisClass, GaloisFamily,
};
use nonintegrability::ode::LinearODE2;
use nonintegrability::variational::{build_ve1_x, HamiltonianParams};

fn main() -> nonintegrability::Result<()> {
    let printed = LinearODE2::parse(
        Var::X,
        (&["8", "0", "0", "2*h"], &["0", "16", "B", "0", "h"]),
        (&["-3", "-A"], &["0", "0", "16", "B", "0", "h"]),
    )?;
    let params = HamiltonianParams::symbolic()
        .with(Sym::C, 16)
        .with(Sym::D, 3)
        .with(Sym::E, 0)
        .with(Sym::F, 0)
        .with(Sym::G, 0);
    let (derived, _) = build_ve1_x(&params)?;

    let finite = GaloisFamily {
        class: GaloisClass::Unipotent,
        matrix: unipotent_family(),
    };
    for (name, ode) in [("printed", &printed), ("derived", &derived)] {
        let t = log_obstruction_test(ode, 6)?;
        println!("{name}: c1 = {}, c2 = {}", ode.c1(), ode.c2());
        println!("  exponents {{{}, {}}}", t.exponents.0, t.exponents.1);
        println!("  x^({}) * (1 + ({}) x + ...)", t.solutions.0.exponent, t.solutions.0.coeff(1)?);
        println!("  {}", t.obstruction);
        println!("  local family at x = 0: {}", t.galois);
        let c = commutator(&t.galois.matrix, &finite.matrix);
        println!("  commutator with (1, 0; mu, 1): ({}, {}; {}, {})", c[0][0], c[0][1], c[1][0], c[1][1]);
        println!("  commutes: {}", families_commute(&t.galois, &finite));

        let a = t.obstruction.value.clone();
        if let Some(on) = solve_for_a(&a) {
            let sub = ode.substitute_param(Sym::A, &on)?;
            let t = log_obstruction_test(&sub, 6)?;
            println!("  on A = {on}: obstruction {}", t.obstruction.value);
        }
    }
    Ok(())
}

/// `A` from a witness linear in `A`.
fn solve_for_a(w: &ParamScalar) -> Option<ParamScalar> {
    let n = w.numer();
    let cs = n.coeffs_in(Sym::A);
    if cs.len() != 2 {
        return None;
    }
    ParamScalar::new(-&cs[0], cs[1].clone()).ok()
}
