//! The Weierstrass parametrization of the invariant-plane motion and the
//! time-domain solutions of the first variational equation.
//!
//! `cargo run --example weierstrass`

use nonintegrability::algebra::{ParamScalar, Rational, Sym};
use nonintegrability::variational::{reduce_cubic, time_domain_basis, weierstrass_series, HamiltonianParams};

fn main() -> nonintegrability::Result<()> {
    // wp with free invariants; the defect must vanish through its truncation
    let wp = weierstrass_series(&Sym::G2.into(), &Sym::G3.into(), 26)?;
    let defect = wp.identity_defect()?;
    println!("wp = {}", wp.series);
    println!(
        "wp'^2 - 4wp^3 + g2 wp + g3 = 0 + O(t^{})? {}",
        defect.trunc_order().map_or("inf".into(), |o| o.to_string()),
        defect.vanishes()
    );

    let cubic = HamiltonianParams::symbolic()
        .with(Sym::B, 0)
        .with(Sym::C, 1)
        .with(Sym::D, 3)
        .with(Sym::E, 0)
        .with(Sym::F, 0)
        .with(Sym::G, 0);
    let red = reduce_cubic(&cubic)?;
    println!("z = ({}) wp + ({}), g2 = {}, g3 = {}", red.lambda, red.mu, red.g2, red.g3);

    let basis = time_domain_basis(&cubic, 8)?;
    let names = [["xi11^(1)", "xi11^(2)"], ["xi12^(1)", "xi12^(2)"]];
    for (pair, name) in basis.solutions.iter().zip(names) {
        for (sol, n) in [&pair.0, &pair.1].into_iter().zip(name) {
            let terms: Vec<String> = (0..=6)
                .filter_map(|k| sol.coeff(k).ok().filter(|c| !c.is_zero()).map(|c| (k, c)))
                .map(|(k, c): (usize, ParamScalar)| format!("({c}) t^({})", &sol.exponent + Rational::from_integer((k as i64).into())))
                .collect();
            println!("{n} = {}", terms.join(" + "));
        }
    }
    Ok(())
}
