use super::params::HamiltonianParams;
use crate::algebra::rational::{int, rat};
use crate::algebra::{ParamScalar, PuiseuxSeries, Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// Laurent expansion of `wp(t; g2, g3)` at its pole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassSeries {
    pub g2: ParamScalar,
    pub g3: ParamScalar,
    pub series: PuiseuxSeries,
}

/// `wp = t^-2 + sum_{k>=2} c_k t^(2k-2)`, known below `t^order`.
///
/// `c2 = g2/20`, `c3 = g3/28` and for `k >= 4`
/// `c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}`.
pub fn weierstrass_series(g2: &ParamScalar, g3: &ParamScalar, order: usize) -> Result<WeierstrassSeries> {
    if order < 4 {
        return Err(Error::Domain(format!("order {order} below 4")));
    }
    // exponents 2k-2 < order
    let kmax = (order + 1) / 2;
    let mut c = vec![ParamScalar::zero(); kmax.max(4) + 1];
    c[2] = g2.scale(&rat(1, 20));
    c[3] = g3.scale(&rat(1, 28));
    for k in 4..=kmax {
        let mut acc = ParamScalar::zero();
        for m in 2..=k - 2 {
            if !c[m].is_zero() && !c[k - m].is_zero() {
                acc += &(&c[m] * &c[k - m]);
            }
        }
        c[k] = acc.scale(&rat(3, ((2 * k + 1) * (k - 3)) as i64));
    }
    // slots for t^-2, t^-1, ..., t^(order-1)
    let len = order + 2;
    let mut coeffs = vec![ParamScalar::zero(); len];
    coeffs[0] = ParamScalar::one();
    for (k, ck) in c.iter().enumerate().skip(2) {
        let slot = 2 * k;
        if slot < len {
            coeffs[slot] = ck.clone();
        }
    }
    Ok(WeierstrassSeries {
        g2: g2.clone(),
        g3: g3.clone(),
        series: PuiseuxSeries::laurent(Var::T, -2, coeffs),
    })
}

impl WeierstrassSeries {
    /// `wp'^2 - 4 wp^3 + g2 wp + g3`; zero through its truncation.
    pub fn identity_defect(&self) -> Result<PuiseuxSeries> {
        let p = &self.series;
        let dp = p.derivative();
        let lhs = dp.mul(&dp)?;
        let cube = p.mul(p)?.mul(p)?.scale(&ParamScalar::from_int(4));
        lhs.sub(&cube)?
            .add(&p.scale(&self.g2))?
            .add(&PuiseuxSeries::constant(Var::T, self.g3.clone()))
    }
}

/// `z = lambda wp + mu` turning `zdot^2 = -2(C z^3 + B z^2 + h)` into
/// `wpdot^2 = 4 wp^3 - g2 wp - g3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicReduction {
    pub lambda: ParamScalar,
    pub mu: ParamScalar,
    pub g2: ParamScalar,
    pub g3: ParamScalar,
}

/// Coefficients are matched, not assumed: the cubic is composed with
/// `lambda w + mu` and the result checked against the Weierstrass form.
pub fn reduce_cubic(params: &HamiltonianParams) -> Result<CubicReduction> {
    if !params.e.is_zero() {
        return Err(Error::NotApplicable("quartic relation (E != 0)".into()));
    }
    if params.c.is_zero() {
        return Err(Error::NotApplicable("no cubic term (C = 0)".into()));
    }
    let lambda = ParamScalar::from_int(-2).checked_div(&params.c)?;
    let mu = (-&params.b).checked_div(&params.c.scale(&int(3)))?;
    let q = UniPoly::new(
        Var::Z,
        vec![params.h.clone(), ParamScalar::zero(), params.b.clone(), params.c.clone()],
    );
    let lin = UniPoly::new(Var::Z, vec![mu.clone(), lambda.clone()]);
    let mut composed = UniPoly::zero(Var::Z);
    for c in q.coeffs().iter().rev() {
        composed = &(&composed * &lin) + &UniPoly::constant(Var::Z, c.clone());
    }
    let scale = ParamScalar::from_int(-2).checked_div(&(&lambda * &lambda))?;
    let w = composed.scale(&scale);
    if w.coeff(3) != ParamScalar::from_int(4) || !w.coeff(2).is_zero() {
        return Err(Error::Domain(format!("unexpected reduced cubic {w}")));
    }
    Ok(CubicReduction {
        lambda,
        mu,
        g2: -&w.coeff(1),
        g3: -&w.coeff(0),
    })
}

/// `z(t) = lambda wp(t) + mu` as a Laurent series at the pole, known
/// below `t^order`.
pub fn plane_solution_series(params: &HamiltonianParams, order: usize) -> Result<(CubicReduction, PuiseuxSeries)> {
    let red = reduce_cubic(params)?;
    let wp = weierstrass_series(&red.g2, &red.g3, order)?;
    let z = wp
        .series
        .scale(&red.lambda)
        .add(&PuiseuxSeries::constant(Var::T, red.mu.clone()))?;
    Ok((red, z))
}

/// Leading exponent of `wp`.
pub fn pole_exponent() -> Rational {
    int(-2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_scalar, Sym};

    #[test]
    fn degenerate_lattice() {
        let w = weierstrass_series(&ParamScalar::zero(), &ParamScalar::zero(), 10).unwrap();
        assert_eq!(w.series.terms().count(), 1);
        assert_eq!(w.series.lead_exp(), Some(int(-2)));
    }

    #[test]
    fn g2_only_coefficients() {
        let g2 = ParamScalar::sym(Sym::P);
        let w = weierstrass_series(&g2, &ParamScalar::zero(), 12).unwrap();
        assert_eq!(w.series.coeff_at(&int(2)).unwrap(), parse_scalar("p/20").unwrap());
        assert_eq!(w.series.coeff_at(&int(6)).unwrap(), parse_scalar("p^2/1200").unwrap());
        assert!(w.identity_defect().unwrap().is_zero());
    }

    #[test]
    fn reduction_for_unit_cubic() {
        let p = HamiltonianParams::symbolic()
            .with(Sym::B, 0)
            .with(Sym::C, 1)
            .with(Sym::E, 0);
        let red = reduce_cubic(&p).unwrap();
        assert_eq!(red.lambda, ParamScalar::from_int(-2));
        assert!(red.mu.is_zero());
        assert!(red.g2.is_zero());
        assert_eq!(red.g3, parse_scalar("h/2").unwrap());
    }

    #[test]
    fn reduction_with_quadratic_term() {
        let p = HamiltonianParams::symbolic().with(Sym::C, 16).with(Sym::E, 0);
        let (_, z) = plane_solution_series(&p, 12).unwrap();
        // zdot^2 + 2(16 z^3 + B z^2 + h) vanishes
        let dz = z.derivative();
        let q = UniPoly::new(
            Var::T,
            vec![parse_scalar("h").unwrap(), ParamScalar::zero(), parse_scalar("B").unwrap(), ParamScalar::from_int(16)],
        );
        let lhs = dz.mul(&dz).unwrap().add(&q.eval_series(&z).unwrap().scale(&ParamScalar::from_int(2))).unwrap();
        assert!(lhs.is_zero());
    }
}
