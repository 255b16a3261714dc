use std::fmt;

use crate::algebra::{ParamScalar, RationalFunction, UniPoly, Var};
use crate::error::{Error, Result};

/// `y'' + c1 y' + c2 y = 0` with rational-function coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearODE2 {
    c1: RationalFunction,
    c2: RationalFunction,
}

/// Where a local analysis takes place.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Location {
    /// An explicit point of the field.
    Point(ParamScalar),
    /// Every root of a squarefree polynomial without rational roots.
    SimpleRoots(UniPoly),
    Infinity,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Point(p) => write!(f, "{p}"),
            Location::SimpleRoots(q) => write!(
                f,
                "the {} simple roots of {q}",
                q.degree().unwrap_or(0)
            ),
            Location::Infinity => f.write_str("infinity"),
        }
    }
}

impl LinearODE2 {
    pub fn new(c1: RationalFunction, c2: RationalFunction) -> Result<Self> {
        if c1.var() != c2.var() {
            return Err(Error::VariableMismatch(c1.var().name(), c2.var().name()));
        }
        Ok(Self { c1, c2 })
    }

    /// From numerator/denominator coefficient lists, ascending degree.
    pub fn from_coeffs(
        var: Var,
        c1: (&[ParamScalar], &[ParamScalar]),
        c2: (&[ParamScalar], &[ParamScalar]),
    ) -> Result<Self> {
        let rf = |n: &[ParamScalar], d: &[ParamScalar]| {
            RationalFunction::new(UniPoly::new(var, n.to_vec()), UniPoly::new(var, d.to_vec()))
        };
        Self::new(rf(c1.0, c1.1)?, rf(c2.0, c2.1)?)
    }

    /// Like [`Self::from_coeffs`] with every coefficient given as text,
    /// e.g. `["8", "0", "0", "2*h"]` for `8 + 2h x^3`.
    pub fn parse(var: Var, c1: (&[&str], &[&str]), c2: (&[&str], &[&str])) -> Result<Self> {
        let p = |v: &[&str]| v.iter().map(|s| crate::algebra::parse_scalar(s)).collect::<Result<Vec<_>>>();
        Self::from_coeffs(var, (&p(c1.0)?, &p(c1.1)?), (&p(c2.0)?, &p(c2.1)?))
    }

    pub fn var(&self) -> Var {
        self.c1.var()
    }

    pub fn c1(&self) -> &RationalFunction {
        &self.c1
    }

    pub fn c2(&self) -> &RationalFunction {
        &self.c2
    }

    /// Monic lcm of the two denominators.
    pub fn common_denominator(&self) -> UniPoly {
        let (a, b) = (self.c1.den(), self.c2.den());
        let g = a.gcd(b);
        (a * &b.div_exact(&g).expect("gcd divides")).monic()
    }

    /// The change of variable `x = 1/z`:
    /// `c1 -> 2/x - c1(1/x)/x^2`, `c2 -> c2(1/x)/x^4`.
    pub fn transform_to_infinity(&self) -> Result<Self> {
        let nv = self.var().reciprocal();
        let two_over_x = RationalFunction::from_poly(UniPoly::constant(nv, ParamScalar::from_int(2)))
            .mul_var_pow(-1)?;
        let c1 = two_over_x.sub(&self.c1.compose_reciprocal()?.mul_var_pow(-2)?)?;
        let c2 = self.c2.compose_reciprocal()?.mul_var_pow(-4)?;
        Self::new(c1, c2)
    }

    /// Translates the point `a` to the origin.
    pub fn shift_to_origin(&self, a: &ParamScalar) -> Result<Self> {
        Self::new(self.c1.shift(a)?, self.c2.shift(a)?)
    }

    /// Finite singular points and infinity (when singular there).
    ///
    /// The origin and rational roots are split out as explicit points;
    /// what remains must be squarefree and is reported as a block of
    /// simple roots.
    pub fn singular_points(&self) -> Result<Vec<Location>> {
        let mut out = Vec::new();
        let mut rest = self.common_denominator();
        if let Some(v) = rest.valuation() {
            if v > 0 {
                out.push(Location::Point(ParamScalar::zero()));
                rest = rest.div_exact(&UniPoly::monomial(rest.var(), ParamScalar::one(), v))?;
            }
        }
        if let Some(roots) = rest.rational_roots() {
            for r in roots {
                let lin = UniPoly::new(
                    rest.var(),
                    vec![ParamScalar::from_rational(-r.clone()), ParamScalar::one()],
                );
                while rest.divrem(&lin)?.1.is_zero() && rest.degree().unwrap_or(0) > 0 {
                    rest = rest.div_exact(&lin)?;
                }
                out.push(Location::Point(ParamScalar::from_rational(r)));
            }
        }
        if rest.degree().unwrap_or(0) > 0 {
            if !rest.is_squarefree() {
                return Err(Error::RepeatedRoots(rest.to_string()));
            }
            out.push(Location::SimpleRoots(rest));
        }
        let inf = self.transform_to_infinity()?;
        if inf.c1.den().valuation().unwrap_or(0) > 0 || inf.c2.den().valuation().unwrap_or(0) > 0 {
            out.push(Location::Infinity);
        }
        Ok(out)
    }

    pub fn substitute_param(&self, s: crate::algebra::Sym, v: &ParamScalar) -> Result<Self> {
        let sub = |f: &RationalFunction| {
            RationalFunction::new(f.num().substitute_param(s, v)?, f.den().substitute_param(s, v)?)
        };
        Self::new(sub(&self.c1)?, sub(&self.c2)?)
    }
}

impl fmt::Display for LinearODE2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var();
        write!(f, "y'' + [{}]*y' + [{}]*y = 0  (in {v})", self.c1, self.c2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_scalar, Sym};

    fn s(src: &str) -> ParamScalar {
        parse_scalar(src).unwrap()
    }

    #[test]
    fn flat_equation_at_infinity() {
        let ode = LinearODE2::new(RationalFunction::zero(Var::Z), RationalFunction::zero(Var::Z)).unwrap();
        let inf = ode.transform_to_infinity().unwrap();
        assert_eq!(inf.c1().to_string(), "(2)/(x)");
        assert!(inf.c2().is_zero());
        assert_eq!(ode.singular_points().unwrap(), vec![Location::Infinity]);
        assert_eq!(inf.transform_to_infinity().unwrap(), ode);
    }

    #[test]
    fn cubic_block_is_simple() {
        // c1 = 3z^2/(2(z^3+h)), c2 = -(A+3z)/(z^3+h)
        let ode = LinearODE2::from_coeffs(
            Var::Z,
            (&[s("0"), s("0"), s("3")], &[s("2*h"), s("0"), s("0"), s("2")]),
            (&[s("-A"), s("-3")], &[s("h"), s("0"), s("0"), s("1")]),
        )
        .unwrap();
        let pts = ode.singular_points().unwrap();
        assert_eq!(pts.len(), 2);
        assert!(matches!(&pts[0], Location::SimpleRoots(q) if q.degree() == Some(3)));
        assert_eq!(pts[1], Location::Infinity);
        let _ = Sym::H;
    }

    #[test]
    fn repeated_roots_refused() {
        let ode = LinearODE2::from_coeffs(
            Var::Z,
            (&[s("1")], &[s("h"), s("2"), s("1/h")]),
            (&[s("0")], &[s("1")]),
        )
        .unwrap();
        assert!(matches!(ode.singular_points(), Err(Error::RepeatedRoots(_))));
    }
}
