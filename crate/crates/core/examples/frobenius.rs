//! Frobenius solutions at infinity for the cubic family `C = 1, D = 3`.
//!
//! Both normal equations are written in `x = 1/z`; the solutions are
//! printed with their leading coefficients and checked by back-substitution.
//!
//! `cargo run --example frobenius`

use nonintegrability::algebra::Var;
use nonintegrability::ode::{frobenius_solve, verify_solution, LinearODE2};

/// `xi'' + (4h x^3 + 2B x + 1)/(2x(h x^3 + B x + 1)) xi' - (k x + 3)/(x^2(h x^3 + B x + 1)) xi = 0`.
fn at_infinity(k: &str) -> nonintegrability::Result<LinearODE2> {
    let neg_k = format!("-({k})");
    LinearODE2::parse(
        Var::X,
        (&["1", "2*B", "0", "4*h"], &["0", "2", "2*B", "0", "2*h"]),
        (&["-3", &neg_k], &["0", "0", "1", "B", "0", "h"]),
    )
}

fn main() -> nonintegrability::Result<()> {
    let order = 12;
    for (name, k) in [("xi11", "A"), ("xi12", "B")] {
        let ode = at_infinity(k)?;
        let (hi, lo) = frobenius_solve(&ode, order)?;
        println!("{name}: exponents {{{}, {}}}", hi.exponent, lo.exponent);
        for sol in [&lo, &hi] {
            println!("  x^({}):", sol.exponent);
            for n in 1..=2 {
                println!("    x^{n}: {}", sol.coeff(n)?);
            }
            println!("    satisfies the equation to order {order}: {}", verify_solution(&ode, sol, order)?);
        }
        println!("  log coefficient: {}", lo.log_obstruction);
    }
    Ok(())
}
