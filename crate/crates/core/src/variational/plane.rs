use super::params::HamiltonianParams;
use crate::algebra::rational::rat;
use crate::algebra::{ParamScalar, RationalFunction, UniPoly, Var};
use crate::error::Result;
use crate::ode::LinearODE2;

/// Motion in the plane `r = p_r = 0`: `zdot^2 = -2 q(z)` with
/// `q = E z^4 + C z^3 + B z^2 + h`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantPlaneRelation {
    pub q: UniPoly,
    pub separable: bool,
    /// `gcd(q, q')` is a unit in the parameter field.
    pub squarefree: bool,
}

pub fn build_invariant_plane(params: &HamiltonianParams) -> InvariantPlaneRelation {
    let q = UniPoly::new(
        Var::Z,
        vec![
            params.h.clone(),
            ParamScalar::zero(),
            params.b.clone(),
            params.c.clone(),
            params.e.clone(),
        ],
    );
    let squarefree = q.degree().unwrap_or(0) == 0 || q.is_squarefree();
    InvariantPlaneRelation {
        q,
        separable: params.is_separable(),
        squarefree,
    }
}

/// First variational equations in time: `xi11'' = k1(z) xi11`,
/// `xi12'' = k2(z) xi12`, with `k` the negated second partials of the
/// potential on the plane.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TimeVE {
    pub k1: UniPoly,
    pub k2: UniPoly,
}

pub fn build_time_ve(params: &HamiltonianParams) -> TimeVE {
    let m2 = |v: &ParamScalar| v.scale(&crate::algebra::rational::int(-2));
    // -V_rr = -2(A + D z + F z^2), -V_zz = -2(B + 3C z + 6E z^2)
    let k1 = UniPoly::new(Var::Z, vec![m2(&params.a), m2(&params.d), m2(&params.f)]);
    let k2 = UniPoly::new(
        Var::Z,
        vec![
            m2(&params.b),
            m2(&params.c.scale(&crate::algebra::rational::int(3))),
            m2(&params.e.scale(&crate::algebra::rational::int(6))),
        ],
    );
    TimeVE { k1, k2 }
}

/// The time equations rewritten in `z` via `zdot^2 = -2q`, `zddot = -q'`:
/// `xi'' + q'/(2q) xi' + k/(2q) xi = 0`.
pub fn build_ve1_z(params: &HamiltonianParams) -> Result<(LinearODE2, LinearODE2)> {
    let plane = build_invariant_plane(params);
    let q = &plane.q;
    let c1 = RationalFunction::new(q.derivative(), q.scale(&ParamScalar::from_int(2)))?;
    let ve = build_time_ve(params);
    let two_q = q.scale(&ParamScalar::from_int(2));
    let c2 = |k: &UniPoly| RationalFunction::new(k.clone(), two_q.clone());
    Ok((
        LinearODE2::new(c1.clone(), c2(&ve.k1)?)?,
        LinearODE2::new(c1, c2(&ve.k2)?)?,
    ))
}

/// Both first variational equations in the `x = 1/z` chart.
pub fn build_ve1_x(params: &HamiltonianParams) -> Result<(LinearODE2, LinearODE2)> {
    let (a, b) = build_ve1_z(params)?;
    Ok((a.transform_to_infinity()?, b.transform_to_infinity()?))
}

/// `x^4 q(1/x)`, the polynomial behind the time element
/// `dt = -dx / sqrt(-2 x^4 q(1/x))` in the `x` chart.
pub fn reversed_quartic(params: &HamiltonianParams) -> UniPoly {
    let q = build_invariant_plane(params).q;
    let mut coeffs = q.coeffs().to_vec();
    coeffs.resize(5, ParamScalar::zero());
    coeffs.reverse();
    UniPoly::new(Var::X, coeffs)
}

/// `2 x^4 q(1/x)`; its inverse square root is the integration weight in
/// the `x` chart up to a constant factor.
pub fn weight_radicand(params: &HamiltonianParams) -> UniPoly {
    reversed_quartic(params).scale(&ParamScalar::from_rational(rat(2, 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_scalar, Sym};

    fn c0_first() -> HamiltonianParams {
        HamiltonianParams::symbolic()
            .with(Sym::C, 1)
            .with(Sym::D, 3)
            .with(Sym::E, 0)
            .with(Sym::F, 0)
            .with(Sym::G, 0)
    }

    #[test]
    fn generic_ve1_shape() {
        let (v1, v2) = build_ve1_z(&HamiltonianParams::symbolic()).unwrap();
        assert_eq!(v1.c1().den().degree(), Some(4));
        assert_eq!(v1.c2().num().degree(), Some(2));
        assert_eq!(v2.c2().num().degree(), Some(2));
        assert_eq!(v1.c1().num().degree(), Some(3));
    }

    #[test]
    fn lame_form_at_infinity() {
        let (v1, _) = build_ve1_x(&c0_first()).unwrap();
        // (4hx^3 + 2Bx + 1)/(2x(hx^3 + Bx + 1)) after monic normalization
        let expected_num = UniPoly::new(
            Var::X,
            vec![
                parse_scalar("1/(2*h)").unwrap(),
                parse_scalar("B/h").unwrap(),
                ParamScalar::zero(),
                ParamScalar::from_int(2),
            ],
        );
        assert_eq!(v1.c1().num(), &expected_num);
        let expected_c2 = UniPoly::new(Var::X, vec![parse_scalar("-3/h").unwrap(), parse_scalar("-A/h").unwrap()]);
        assert_eq!(v1.c2().num(), &expected_c2);
    }

    #[test]
    fn cubic_relation() {
        let plane = build_invariant_plane(&c0_first());
        assert_eq!(plane.q.degree(), Some(3));
        assert!(plane.squarefree);
        assert!(!plane.separable);
    }
}
