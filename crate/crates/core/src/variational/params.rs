use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::rational::fmt_rational;
use crate::algebra::{ParamScalar, Rational, Sym};
use crate::error::{Error, Result};

/// Coefficients of `H = (p_r^2 + p_z^2)/2 + A r^2 + B z^2 + C z^3 + D r^2 z
/// + E z^4 + F r^2 z^2 + G r^4` and the energy constant `h` of the
/// invariant-plane motion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HamiltonianParams {
    pub a: ParamScalar,
    pub b: ParamScalar,
    pub c: ParamScalar,
    pub d: ParamScalar,
    pub e: ParamScalar,
    pub f: ParamScalar,
    pub g: ParamScalar,
    pub h: ParamScalar,
}

/// Explicit rational coefficients, as they cross the CLI boundary.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RationalParams {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
    pub e: String,
    pub f: String,
    pub g: String,
}

impl HamiltonianParams {
    /// Every coefficient and `h` symbolic.
    pub fn symbolic() -> Self {
        Self {
            a: Sym::A.into(),
            b: Sym::B.into(),
            c: Sym::C.into(),
            d: Sym::D.into(),
            e: Sym::E.into(),
            f: Sym::F.into(),
            g: Sym::G.into(),
            h: Sym::H.into(),
        }
    }

    /// Explicit `A..G`; `h` stays symbolic unless given.
    pub fn from_rationals(coeffs: [Rational; 7], h: Option<Rational>) -> Self {
        let [a, b, c, d, e, f, g] = coeffs.map(ParamScalar::from_rational);
        Self {
            a,
            b,
            c,
            d,
            e,
            f,
            g,
            h: h.map_or_else(|| Sym::H.into(), ParamScalar::from_rational),
        }
    }

    /// Parses `[A, ..., G]` fraction strings.
    pub fn parse(coeffs: &[&str; 7], h: Option<&str>) -> Result<Self> {
        let mut out = [(); 7].map(|_| Rational::default());
        for (slot, s) in out.iter_mut().zip(coeffs) {
            *slot = crate::algebra::rational::parse_rational(s)?;
        }
        let h = match h {
            None | Some("symbolic") => None,
            Some(s) => Some(crate::algebra::rational::parse_rational(s)?),
        };
        Ok(Self::from_rationals(out, h))
    }

    pub fn get(&self, s: Sym) -> &ParamScalar {
        match s {
            Sym::A => &self.a,
            Sym::B => &self.b,
            Sym::C => &self.c,
            Sym::D => &self.d,
            Sym::E => &self.e,
            Sym::F => &self.f,
            Sym::G => &self.g,
            Sym::H => &self.h,
            _ => panic!("{s} is not a Hamiltonian parameter"),
        }
    }

    pub fn with(mut self, s: Sym, v: impl Into<ParamScalar>) -> Self {
        let v = v.into();
        match s {
            Sym::A => self.a = v,
            Sym::B => self.b = v,
            Sym::C => self.c = v,
            Sym::D => self.d = v,
            Sym::E => self.e = v,
            Sym::F => self.f = v,
            Sym::G => self.g = v,
            Sym::H => self.h = v,
            _ => panic!("{s} is not a Hamiltonian parameter"),
        }
        self
    }

    /// `D = 0` and `F = 0`: the potential splits as `V1(r) + V2(z)`.
    pub fn is_separable(&self) -> bool {
        self.d.is_zero() && self.f.is_zero()
    }

    /// The seven coefficients when all are explicit.
    pub fn rationals(&self) -> Option<[Rational; 7]> {
        let v: Vec<Rational> = Sym::COEFFS
            .iter()
            .map(|&s| self.get(s).as_rational())
            .collect::<Option<_>>()?;
        v.try_into().ok()
    }

    pub fn require_rationals(&self) -> Result<[Rational; 7]> {
        self.rationals()
            .ok_or_else(|| Error::NotApplicable("parameters must be explicit rationals".into()))
    }

    /// `V = sum c r^i z^j` as `(c, i, j)`.
    pub fn potential_terms(&self) -> Vec<(ParamScalar, u32, u32)> {
        [
            (&self.a, 2, 0),
            (&self.b, 0, 2),
            (&self.c, 0, 3),
            (&self.d, 2, 1),
            (&self.e, 0, 4),
            (&self.f, 2, 2),
            (&self.g, 4, 0),
        ]
        .into_iter()
        .filter(|(c, _, _)| !c.is_zero())
        .map(|(c, i, j)| (c.clone(), i, j))
        .collect()
    }

    /// `-dV/dr` and `-dV/dz` as term lists.
    pub fn force_terms(&self) -> [Vec<(ParamScalar, u32, u32)>; 2] {
        let mut fr = Vec::new();
        let mut fz = Vec::new();
        for (c, i, j) in self.potential_terms() {
            if i > 0 {
                fr.push((c.scale(&Rational::from_integer((-(i as i64)).into())), i - 1, j));
            }
            if j > 0 {
                fz.push((c.scale(&Rational::from_integer((-(j as i64)).into())), i, j - 1));
            }
        }
        [fr, fz]
    }

    pub fn to_rational_strings(&self) -> Option<RationalParams> {
        let r = self.rationals()?;
        let s = |x: &Rational| fmt_rational(x);
        Some(RationalParams {
            a: s(&r[0]),
            b: s(&r[1]),
            c: s(&r[2]),
            d: s(&r[3]),
            e: s(&r[4]),
            f: s(&r[5]),
            g: s(&r[6]),
        })
    }
}

impl fmt::Display for HamiltonianParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "A={}, B={}, C={}, D={}, E={}, F={}, G={}, h={}",
            self.a, self.b, self.c, self.d, self.e, self.f, self.g, self.h
        )
    }
}
