use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::linear::{LinearODE2, Location};
use crate::algebra::rational::{fmt_rational, int, rat, rational_sqrt, rem_euclid};
use crate::algebra::{ParamScalar, Rational, UniPoly};
use crate::error::{Error, Result};

/// Roots of a monic indicial quadratic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IndicialRoots {
    /// Both roots rational, `hi >= lo`.
    Rational { hi: Rational, lo: Rational },
    /// Rational coefficients, non-square discriminant.
    Irrational { discriminant: Rational },
    /// Roots in the parameter field.
    Symbolic { hi: ParamScalar, lo: ParamScalar },
    /// Discriminant is not a square in the parameter field.
    NonRational { discriminant: ParamScalar },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndicialData {
    pub location: Location,
    /// `(p2, p1, p0)` of `p2 r^2 + p1 r + p0` with `p2 = 1`.
    pub quadratic: (ParamScalar, ParamScalar, ParamScalar),
    pub roots: IndicialRoots,
}

impl IndicialData {
    /// From the local invariants `a = lim (z-z0) c1`, `b = lim (z-z0)^2 c2`.
    fn from_ab(location: Location, a: &ParamScalar, b: &ParamScalar) -> Self {
        let p1 = a - &ParamScalar::one();
        Self::from_quadratic(location, p1, b.clone())
    }

    fn from_quadratic(location: Location, p1: ParamScalar, p0: ParamScalar) -> Self {
        let disc = &(&p1 * &p1) - &p0.scale(&int(4));
        let half = rat(1, 2);
        let roots = match (disc.as_rational(), p1.as_rational()) {
            (Some(d), Some(p)) => match rational_sqrt(&d) {
                Some(s) => IndicialRoots::Rational {
                    hi: (-&p + &s) * &half,
                    lo: (-&p - &s) * &half,
                },
                None => IndicialRoots::Irrational { discriminant: d },
            },
            _ => match disc.sqrt() {
                Some(s) => IndicialRoots::Symbolic {
                    hi: (&(-&p1) + &s).scale(&half),
                    lo: (&(-&p1) - &s).scale(&half),
                },
                None => IndicialRoots::NonRational { discriminant: disc },
            },
        };
        Self {
            location,
            quadratic: (ParamScalar::one(), p1, p0),
            roots,
        }
    }

    pub fn rational_roots(&self) -> Option<(Rational, Rational)> {
        match &self.roots {
            IndicialRoots::Rational { hi, lo } => Some((hi.clone(), lo.clone())),
            _ => None,
        }
    }

    /// Root sum and product read off the quadratic.
    pub fn sum_and_product(&self) -> (ParamScalar, ParamScalar) {
        (-&self.quadratic.1, self.quadratic.2.clone())
    }
}

impl fmt::Display for IndicialData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (_, p1, p0) = &self.quadratic;
        write!(f, "at {}: r^2 + ({p1})*r + ({p0}) = 0, ", self.location)?;
        match &self.roots {
            IndicialRoots::Rational { hi, lo } => {
                write!(f, "roots {{{}, {}}}", fmt_rational(hi), fmt_rational(lo))
            }
            IndicialRoots::Irrational { discriminant } => {
                write!(f, "irrational roots (discriminant {})", fmt_rational(discriminant))
            }
            IndicialRoots::Symbolic { hi, lo } => write!(f, "roots {{{hi}, {lo}}}"),
            IndicialRoots::NonRational { discriminant } => {
                write!(f, "roots outside the field (discriminant {discriminant})")
            }
        }
    }
}

/// `a` and `b` of a simple-root block `q`, read structurally: `c1` must
/// have residue a constant multiple of `q'/q` at every root, and `c2` at
/// most a double pole with a constant leading coefficient.
fn simple_root_ab(ode: &LinearODE2, q: &UniPoly) -> Result<(ParamScalar, ParamScalar)> {
    let unknown = |why: &str| Error::FiniteExponentUnknown(format!("{why} at roots of {q}"));
    // constant c with n = c * d^(k) modulo q
    let const_ratio = |n: &UniPoly, dk: &UniPoly| -> Result<ParamScalar> {
        let rn = n.divrem(q)?.1;
        let rd = dk.divrem(q)?.1;
        if rd.is_zero() {
            return Err(unknown("degenerate pole structure"));
        }
        if rn.is_zero() {
            return Ok(ParamScalar::zero());
        }
        if rn.degree() != rd.degree() {
            return Err(unknown("residue is not constant"));
        }
        let c = &rn.lc() / &rd.lc();
        if !(&rn - &rd.scale(&c)).is_zero() {
            return Err(unknown("residue is not constant"));
        }
        Ok(c)
    };
    // multiplicity of q in a denominator (0, 1, 2, ...), requiring all or none of its roots
    let multiplicity = |d: &UniPoly| -> Result<usize> {
        let mut m = 0;
        let mut cur = d.clone();
        loop {
            let g = cur.gcd(q);
            match g.degree() {
                Some(0) | None => return Ok(m),
                k if k == q.degree() => {
                    cur = cur.div_exact(q)?;
                    m += 1;
                }
                _ => return Err(unknown("partial pole set")),
            }
        }
    };
    let (n1, d1) = (ode.c1().num(), ode.c1().den());
    let a = match multiplicity(d1)? {
        0 => ParamScalar::zero(),
        1 => const_ratio(n1, &d1.derivative())?,
        _ => return Err(Error::IrregularSingularity(format!("c1 has a multiple pole at roots of {q}"))),
    };
    let (n2, d2) = (ode.c2().num(), ode.c2().den());
    let b = match multiplicity(d2)? {
        0 | 1 => ParamScalar::zero(),
        2 => {
            let d2h = d2.derivative().derivative().scale(&ParamScalar::from_rational(rat(1, 2)));
            const_ratio(n2, &d2h)?
        }
        _ => return Err(Error::IrregularSingularity(format!("c2 has a pole of order > 2 at roots of {q}"))),
    };
    Ok((a, b))
}

fn simple_roots_block(ode: &LinearODE2) -> Result<UniPoly> {
    ode.singular_points()?
        .into_iter()
        .find_map(|l| match l {
            Location::SimpleRoots(q) => Some(q),
            _ => None,
        })
        .ok_or_else(|| Error::NotApplicable("no block of symbolic simple roots".into()))
}

/// Indicial data valid simultaneously at every root of the squarefree
/// singular block.
pub fn indicial_finite_simple_root(ode: &LinearODE2) -> Result<IndicialData> {
    let q = simple_roots_block(ode)?;
    let (a, b) = simple_root_ab(ode, &q)?;
    Ok(IndicialData::from_ab(Location::SimpleRoots(q), &a, &b))
}

/// Local `(a, b)` at an explicit point.
fn point_ab(ode: &LinearODE2, z0: &ParamScalar) -> Result<(ParamScalar, ParamScalar)> {
    let shifted = if z0.is_zero() {
        ode.clone()
    } else {
        ode.shift_to_origin(z0)?
    };
    let irregular = || Error::IrregularSingularity(format!("at {}", z0));
    if shifted.c1().pole_order_at_zero() > 1 || shifted.c2().pole_order_at_zero() > 2 {
        return Err(irregular());
    }
    let p = shifted.c1().mul_var_pow(1)?;
    let q = shifted.c2().mul_var_pow(2)?;
    Ok((p.eval(&ParamScalar::zero())?, q.eval(&ParamScalar::zero())?))
}

pub fn indicial_at_point(ode: &LinearODE2, z0: &ParamScalar) -> Result<IndicialData> {
    let (a, b) = point_ab(ode, z0)?;
    Ok(IndicialData::from_ab(Location::Point(z0.clone()), &a, &b))
}

/// `(lim z c1, lim z^2 c2)` as `z -> infinity`.
fn infinity_ab(ode: &LinearODE2) -> Result<(ParamScalar, ParamScalar)> {
    let a = ode.c1().limit_at_infinity(1);
    let b = ode.c2().limit_at_infinity(2);
    match (a, b) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::IrregularSingularity("at infinity".into())),
    }
}

/// Indicial equation at infinity in the `x = 1/z` chart:
/// `r^2 + (1 - a_inf) r + b_inf = 0`.
pub fn indicial_at_infinity(ode: &LinearODE2) -> Result<IndicialData> {
    let (a, b) = infinity_ab(ode)?;
    Ok(IndicialData::from_quadratic(
        Location::Infinity,
        &ParamScalar::one() - &a,
        b,
    ))
}

/// Exponent difference `Delta` with `Delta^2 = (1-a)^2 - 4b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Delta {
    Exact(ParamScalar),
    Sqrt(ParamScalar),
}

impl Delta {
    pub fn squared(&self) -> ParamScalar {
        match self {
            Delta::Exact(d) => d * d,
            Delta::Sqrt(r) => r.clone(),
        }
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::Exact(d) => write!(f, "{d}"),
            Delta::Sqrt(r) => write!(f, "sqrt({r})"),
        }
    }
}

/// Local monodromy trace `t = 2 cos(pi Delta)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "form", content = "arg")]
pub enum TraceValue {
    Zero,
    /// Argument reduced into `[0, 1]`.
    TwoCosPi(String),
    TwoCosPiIrrational(String),
    TwoCosPiSymbolic(String),
}

impl TraceValue {
    pub fn from_delta(d: &Delta) -> Self {
        match d {
            Delta::Exact(x) => match x.as_rational() {
                Some(r) => {
                    let mut m = rem_euclid(&r, &int(2));
                    if m > Rational::one() {
                        m = int(2) - m;
                    }
                    if m == rat(1, 2) {
                        TraceValue::Zero
                    } else {
                        TraceValue::TwoCosPi(fmt_rational(&m))
                    }
                }
                None => TraceValue::TwoCosPiSymbolic(x.to_string()),
            },
            Delta::Sqrt(r) => TraceValue::TwoCosPiIrrational(format!("sqrt({r})")),
        }
    }

    /// The trace when it is rational: 2, 1, 0, -1, -2.
    pub fn rational_value(&self) -> Option<Rational> {
        match self {
            TraceValue::Zero => Some(Rational::zero()),
            TraceValue::TwoCosPi(a) => match a.as_str() {
                "0" => Some(int(2)),
                "1/3" => Some(int(1)),
                "2/3" => Some(int(-1)),
                "1" => Some(int(-2)),
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Display for TraceValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceValue::Zero => f.write_str("0"),
            TraceValue::TwoCosPi(a) => write!(f, "2cos(pi*{a})"),
            TraceValue::TwoCosPiIrrational(a) | TraceValue::TwoCosPiSymbolic(a) => {
                write!(f, "2cos(pi*({a}))")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChurchillInvariants {
    pub a: ParamScalar,
    pub b: ParamScalar,
    pub delta: Delta,
    pub trace: TraceValue,
}

impl ChurchillInvariants {
    pub fn from_ab(a: ParamScalar, b: ParamScalar) -> Self {
        let one_a = &ParamScalar::one() - &a;
        let d2 = &(&one_a * &one_a) - &b.scale(&int(4));
        let delta = match d2.as_rational() {
            Some(r) => match rational_sqrt(&r) {
                Some(s) => Delta::Exact(ParamScalar::from_rational(s.abs())),
                None => Delta::Sqrt(d2),
            },
            None => match d2.sqrt() {
                Some(s) => Delta::Exact(s),
                None => Delta::Sqrt(d2),
            },
        };
        let trace = TraceValue::from_delta(&delta);
        Self { a, b, delta, trace }
    }
}

/// Churchill data at every singular location: explicit points, the simple
/// root block (structurally), and infinity.
pub fn churchill_invariants(ode: &LinearODE2) -> Result<Vec<(Location, ChurchillInvariants)>> {
    let mut out = Vec::new();
    for loc in ode.singular_points()? {
        let (a, b) = match &loc {
            Location::Point(z0) => point_ab(ode, z0)?,
            Location::SimpleRoots(q) => simple_root_ab(ode, q)?,
            Location::Infinity => infinity_ab(ode)?,
        };
        out.push((loc, ChurchillInvariants::from_ab(a, b)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_scalar, RationalFunction, Var};

    fn s(src: &str) -> ParamScalar {
        parse_scalar(src).unwrap()
    }

    fn lame() -> LinearODE2 {
        LinearODE2::from_coeffs(
            Var::Z,
            (&[s("0"), s("2*B"), s("3")], &[s("2*h"), s("0"), s("2*B"), s("2")]),
            (&[s("-A"), s("-3")], &[s("h"), s("0"), s("B"), s("1")]),
        )
        .unwrap()
    }

    #[test]
    fn lame_exponents() {
        let fin = indicial_finite_simple_root(&lame()).unwrap();
        assert_eq!(fin.rational_roots(), Some((rat(1, 2), int(0))));
        let inf = indicial_at_infinity(&lame()).unwrap();
        assert_eq!(inf.rational_roots(), Some((int(2), rat(-3, 2))));
    }

    #[test]
    fn double_weight_gives_double_zero() {
        // c1 = q'/q with q = z^3 + h
        let ode = LinearODE2::from_coeffs(
            Var::Z,
            (&[s("0"), s("0"), s("3")], &[s("h"), s("0"), s("0"), s("1")]),
            (&[s("0")], &[s("1")]),
        )
        .unwrap();
        let fin = indicial_finite_simple_root(&ode).unwrap();
        assert_eq!(fin.rational_roots(), Some((int(0), int(0))));
    }

    #[test]
    fn one_over_z_at_infinity() {
        let c1 = RationalFunction::from_poly(UniPoly::one(Var::Z)).mul_var_pow(-1).unwrap();
        let ode = LinearODE2::new(c1, RationalFunction::zero(Var::Z)).unwrap();
        let ch = churchill_invariants(&ode).unwrap();
        let (loc, inv) = ch.last().unwrap();
        assert_eq!(loc, &Location::Infinity);
        assert!(inv.a.is_one());
        assert!(inv.b.is_zero());
        assert_eq!(inv.delta, Delta::Exact(ParamScalar::zero()));
        assert_eq!(inv.trace.rational_value(), Some(int(2)));
    }

    #[test]
    fn trace_reduction() {
        let t = |r: Rational| TraceValue::from_delta(&Delta::Exact(ParamScalar::from_rational(r)));
        assert_eq!(t(rat(1, 2)), TraceValue::Zero);
        assert_eq!(t(rat(5, 2)), TraceValue::Zero);
        assert_eq!(t(rat(3, 2)), TraceValue::Zero);
        assert_eq!(t(int(3)), TraceValue::TwoCosPi("1".into()));
        assert_eq!(t(rat(-1, 4)), TraceValue::TwoCosPi("1/4".into()));
    }
}
