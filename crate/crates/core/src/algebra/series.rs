//! Truncated Puiseux series and single-logarithm series.
//!
//! A series is stored as `x^offset * sum_k c_k x^(k/d)`, where `offset` is
//! any rational and `d` the ramification of the step. A truncated series
//! knows its coefficients for `k < prec`; everything at or past
//! `offset + prec/d` is unknown and never reported.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, int, Rational};
use super::scalar::ParamScalar;
use super::symbol::Var;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxSeries {
    var: Var,
    offset: Rational,
    ram: u32,
    coeffs: Vec<ParamScalar>,
    prec: Option<usize>,
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn denom_u32(r: &Rational) -> u32 {
    u32::try_from(r.denom()).expect("ramification fits in u32")
}

/// Position of `e` on the lattice `offset + (1/d)Z`, if it lies on it.
fn lattice_index(offset: &Rational, d: u32, e: &Rational) -> Option<i64> {
    let k = (e - offset) * int(d as i64);
    if k.is_integer() {
        Some(i64::try_from(k.numer()).expect("index fits in i64"))
    } else {
        None
    }
}

impl PuiseuxSeries {
    /// Builds and normalizes a series from raw parts.
    pub fn from_parts(
        var: Var,
        offset: Rational,
        ram: u32,
        mut coeffs: Vec<ParamScalar>,
        prec: Option<usize>,
    ) -> Self {
        assert!(ram > 0, "ramification must be positive");
        if let Some(p) = prec {
            coeffs.truncate(p);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().position(|c| !c.is_zero());
        let (offset, coeffs, prec) = match lead {
            None => match prec {
                // exact zero
                None => return Self::zero_exact(var),
                // O(x^t)
                Some(p) => (offset + Rational::new((p as i64).into(), (ram as i64).into()), vec![], Some(0)),
            },
            Some(0) => (offset, coeffs, prec),
            Some(s) => (
                offset + Rational::new((s as i64).into(), (ram as i64).into()),
                coeffs.split_off(s),
                prec.map(|p| p - s),
            ),
        };
        // smallest step that still carries all information
        let mut g = ram as usize;
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                g = g.gcd(&k);
            }
        }
        if let Some(p) = prec {
            g = g.gcd(&p);
        }
        if g > 1 && coeffs.is_empty() && prec == Some(0) {
            g = ram as usize;
        }
        let (ram, coeffs, prec) = if g > 1 {
            (
                ram / g as u32,
                coeffs.into_iter().step_by(g).collect(),
                prec.map(|p| p / g),
            )
        } else {
            (ram, coeffs, prec)
        };
        Self {
            var,
            offset,
            ram,
            coeffs,
            prec,
        }
    }

    pub fn zero_exact(var: Var) -> Self {
        Self {
            var,
            offset: Rational::zero(),
            ram: 1,
            coeffs: vec![],
            prec: None,
        }
    }

    /// `O(x^e)`.
    pub fn big_o(var: Var, e: Rational) -> Self {
        Self {
            var,
            offset: e,
            ram: 1,
            coeffs: vec![],
            prec: Some(0),
        }
    }

    pub fn constant(var: Var, c: ParamScalar) -> Self {
        Self::monomial(var, c, Rational::zero())
    }

    pub fn monomial(var: Var, c: ParamScalar, e: Rational) -> Self {
        Self::from_parts(var, e, 1, vec![c], None)
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        Self::from_parts(p.var(), Rational::zero(), 1, p.coeffs().to_vec(), None)
    }

    /// Integer-exponent series `sum c_k x^(start + k)` truncated at
    /// `start + coeffs.len()`.
    pub fn laurent(var: Var, start: i64, coeffs: Vec<ParamScalar>) -> Self {
        let n = coeffs.len();
        Self::from_parts(var, int(start), 1, coeffs, Some(n))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn ram(&self) -> u32 {
        self.ram
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// Exponent of the leading nonzero term.
    pub fn lead_exp(&self) -> Option<Rational> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset.clone())
        }
    }

    pub fn lead_coeff(&self) -> ParamScalar {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Exclusive exponent bound; `None` for exact series.
    pub fn trunc_order(&self) -> Option<Rational> {
        self.prec.map(|p| self.exp_at(p))
    }

    /// Lower bound on the valuation used by the truncation rule.
    fn valuation(&self) -> Rational {
        self.offset.clone()
    }

    fn step(&self) -> Rational {
        Rational::new(1.into(), (self.ram as i64).into())
    }

    fn exp_at(&self, k: usize) -> Rational {
        &self.offset + Rational::new((k as i64).into(), (self.ram as i64).into())
    }

    /// `(exponent, coefficient)` pairs of the nonzero stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &ParamScalar)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (self.exp_at(k), c))
    }

    /// Coefficient of `x^e`; errors when `e` is at or past the truncation.
    pub fn coeff_at(&self, e: &Rational) -> Result<ParamScalar> {
        if let Some(t) = self.trunc_order() {
            if e >= &t {
                return Err(Error::precision(fmt_rational(e), fmt_rational(&t)));
            }
        }
        if self.is_zero() {
            return Ok(ParamScalar::zero());
        }
        Ok(match lattice_index(&self.offset, self.ram, e) {
            Some(k) if k >= 0 => self.coeffs.get(k as usize).cloned().unwrap_or_default(),
            _ => ParamScalar::zero(),
        })
    }

    /// The coefficient of `x^-1`.
    pub fn residue(&self) -> Result<ParamScalar> {
        let m1 = int(-1);
        if self.is_zero() && self.is_exact() {
            return Ok(ParamScalar::zero());
        }
        match lattice_index(&self.offset, self.ram, &m1) {
            Some(k) if k >= 0 => self.coeff_at(&m1),
            Some(_) => Ok(ParamScalar::zero()),
            None => {
                // -1 off the lattice: the coefficient is zero by definition
                Ok(ParamScalar::zero())
            }
        }
    }

    /// Drops every term with exponent `>= bound`.
    pub fn truncate(&self, bound: &Rational) -> Result<Self> {
        let d = int(self.ram as i64);
        let k = ((bound - &self.offset) * d).ceil();
        let k = if k.is_negative() {
            0
        } else {
            usize::try_from(k.to_integer()).map_err(|_| Error::Domain("truncation too large".into()))?
        };
        let prec = Some(self.prec.map_or(k, |p| p.min(k)));
        if self.is_zero() && self.is_exact() {
            return Ok(Self::big_o(self.var, bound.clone()));
        }
        Ok(Self::from_parts(
            self.var,
            self.offset.clone(),
            self.ram,
            self.coeffs.clone(),
            prec,
        ))
    }

    /// Coefficients placed on the lattice `base + (1/d)Z`, `len` slots.
    fn spread(&self, base: &Rational, d: u32, len: usize) -> Vec<ParamScalar> {
        let mut out = vec![ParamScalar::zero(); len];
        let scale = (d / self.ram) as usize;
        let shift = lattice_index(base, d, &self.offset).expect("compatible lattice");
        for (k, c) in self.coeffs.iter().enumerate() {
            let i = shift + (k * scale) as i64;
            if i >= 0 && (i as usize) < len {
                out[i as usize] = c.clone();
            }
        }
        out
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.var != o.var {
            return Err(Error::VariableMismatch(self.var.name(), o.var.name()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if self.is_zero() && self.is_exact() {
            return Ok(o.clone());
        }
        if o.is_zero() && o.is_exact() {
            return Ok(self.clone());
        }
        let d = lcm(
            lcm(self.ram, o.ram),
            denom_u32(&(&self.offset - &o.offset)),
        );
        let base = if self.offset <= o.offset {
            self.offset.clone()
        } else {
            o.offset.clone()
        };
        let trunc = match (self.trunc_order(), o.trunc_order()) {
            (None, None) => None,
            (Some(t), None) | (None, Some(t)) => Some(t),
            (Some(a), Some(b)) => Some(if a <= b { a } else { b }),
        };
        let end = |s: &Self| {
            lattice_index(&base, d, &s.exp_at(s.coeffs.len())).expect("lattice") as usize
        };
        let len = match &trunc {
            Some(t) => {
                let t_idx = ((t - &base) * int(d as i64)).ceil().to_integer();
                usize::try_from(t_idx).unwrap_or(0)
            }
            None => end(self).max(end(o)),
        };
        let a = self.spread(&base, d, len);
        let b = o.spread(&base, d, len);
        let coeffs = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        Ok(Self::from_parts(
            self.var,
            base,
            d,
            coeffs,
            trunc.map(|_| len),
        ))
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return match self.trunc_order() {
                Some(_) if !self.is_zero() => {
                    Self::from_parts(self.var, self.offset.clone(), self.ram, vec![], self.prec)
                }
                _ if self.is_zero() => self.clone(),
                _ => Self::zero_exact(self.var),
            };
        }
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            ..self.clone()
        }
    }

    /// Multiplies by `x^e`.
    pub fn mul_monomial(&self, e: &Rational) -> Self {
        if self.is_zero() && self.is_exact() {
            return self.clone();
        }
        Self {
            offset: &self.offset + e,
            ..self.clone()
        }
    }

    /// Exact product truncated at `min(ta + vb, tb + va)`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if (self.is_zero() && self.is_exact()) || (o.is_zero() && o.is_exact()) {
            return Ok(Self::zero_exact(self.var));
        }
        let d = lcm(self.ram, o.ram);
        let base = &self.offset + &o.offset;
        let trunc = match (self.trunc_order(), o.trunc_order()) {
            (None, None) => None,
            (Some(ta), None) => Some(ta + o.valuation()),
            (None, Some(tb)) => Some(tb + self.valuation()),
            (Some(ta), Some(tb)) => {
                let x = ta + o.valuation();
                let y = tb + self.valuation();
                Some(if x <= y { x } else { y })
            }
        };
        let sa = (d / self.ram) as usize;
        let sb = (d / o.ram) as usize;
        let full = (self.coeffs.len().saturating_sub(1)) * sa + (o.coeffs.len().saturating_sub(1)) * sb + 1;
        let len = match &trunc {
            Some(t) => {
                let k = ((t - &base) * int(d as i64)).to_integer();
                usize::try_from(k).unwrap_or(0)
            }
            None => full,
        };
        let mut out = vec![ParamScalar::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let ia = i * sa;
            if ia >= len {
                break;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                let k = ia + j * sb;
                if k >= len {
                    break;
                }
                if !b.is_zero() {
                    out[k] += &(a * b);
                }
            }
        }
        Ok(Self::from_parts(
            self.var,
            base,
            d,
            out,
            trunc.map(|_| len),
        ))
    }

    pub fn derivative(&self) -> Self {
        if self.is_zero() && self.is_exact() {
            return self.clone();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&self.exp_at(k)))
            .collect();
        Self::from_parts(
            self.var,
            &self.offset - int(1),
            self.ram,
            coeffs,
            self.prec,
        )
    }

    /// Term-wise antiderivative and the coefficient of `x^-1`, which has
    /// no series antiderivative.
    pub fn integrate(&self) -> Result<(Self, ParamScalar)> {
        let residue = self.residue()?;
        if self.is_zero() && self.is_exact() {
            return Ok((self.clone(), residue));
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let e1 = self.exp_at(k) + int(1);
                if e1.is_zero() {
                    ParamScalar::zero()
                } else {
                    c.scale(&e1.recip())
                }
            })
            .collect();
        Ok((
            Self::from_parts(
                self.var,
                &self.offset + int(1),
                self.ram,
                coeffs,
                self.prec,
            ),
            residue,
        ))
    }

    /// Relative precision: number of known lattice slots from the lead.
    fn rel_len(&self, default_terms: usize) -> usize {
        match self.prec {
            Some(p) => p,
            None if self.coeffs.len() <= 1 => 1,
            None => default_terms,
        }
    }

    /// `u^alpha` for `u = 1 + ...` given as slot coefficients, via the
    /// J.C.P. Miller recurrence.
    fn unit_power(u: &[ParamScalar], alpha: &Rational, len: usize) -> Vec<ParamScalar> {
        let mut w = Vec::with_capacity(len);
        if len == 0 {
            return w;
        }
        w.push(ParamScalar::one());
        let a1 = alpha + int(1);
        for n in 1..len {
            let mut acc = ParamScalar::zero();
            for k in 1..=n.min(u.len().saturating_sub(1)) {
                if u[k].is_zero() {
                    continue;
                }
                let f = &a1 * int(k as i64) - int(n as i64);
                if f.is_zero() {
                    continue;
                }
                acc += &(&u[k] * &w[n - k]).scale(&f);
            }
            w.push(acc.scale(&Rational::new(1.into(), (n as i64).into())));
        }
        w
    }

    /// Multiplicative inverse. Exact multi-term series are expanded to
    /// `default_terms` slots.
    pub fn inverse(&self, default_terms: Option<usize>) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let len = self.rel_len(default_terms.unwrap_or(12));
        let (c, u) = self.split_lead();
        let w = Self::unit_power(&u, &int(-1), len);
        let cinv = c.inv()?;
        let prec = if self.is_exact() && self.coeffs.len() <= 1 {
            None
        } else {
            Some(len)
        };
        Ok(Self::from_parts(
            self.var,
            -&self.offset,
            self.ram,
            w.iter().map(|x| x * &cinv).collect(),
            prec,
        ))
    }

    /// `(lead coefficient, normalized unit part)`.
    fn split_lead(&self) -> (ParamScalar, Vec<ParamScalar>) {
        let c = self.lead_coeff();
        let ci = c.inv().expect("nonzero lead");
        (c, self.coeffs.iter().map(|x| x * &ci).collect())
    }

    /// `x^(alpha v) u^alpha` where `self = c x^v u`; the constant `c` is
    /// returned separately since `c^alpha` need not lie in the field.
    pub fn normalized_power(&self, alpha: &Rational, default_terms: usize) -> Result<(ParamScalar, Self)> {
        if self.is_zero() {
            return Err(Error::Domain("power of the zero series".into()));
        }
        let len = self.rel_len(default_terms);
        let (c, u) = self.split_lead();
        let w = Self::unit_power(&u, alpha, len);
        let offset = &self.offset * alpha;
        let d = lcm(self.ram, denom_u32(&offset));
        // place slots on the finer lattice if alpha introduces ramification
        let scale = (d / self.ram) as usize;
        let mut coeffs = vec![ParamScalar::zero(); (len.max(1) - 1) * scale + 1];
        for (k, x) in w.into_iter().enumerate() {
            coeffs[k * scale] = x;
        }
        let prec = if self.is_exact() && self.coeffs.len() <= 1 {
            None
        } else {
            Some(len * scale)
        };
        Ok((c, Self::from_parts(self.var, offset, d, coeffs, prec)))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&ParamScalar) -> Result<ParamScalar>) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<_>>>()?;
        if self.is_zero() && self.is_exact() {
            return Ok(self.clone());
        }
        Ok(Self::from_parts(
            self.var,
            self.offset.clone(),
            self.ram,
            coeffs,
            self.prec,
        ))
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    /// Exact when every known coefficient is zero through truncation.
    pub fn vanishes(&self) -> bool {
        self.is_zero()
    }

    /// Integer-lattice view: coefficients at `x^start ... x^(start+n-1)`.
    pub fn integer_coeffs(&self, start: i64, n: usize) -> Result<Vec<ParamScalar>> {
        (0..n as i64).map(|k| self.coeff_at(&int(start + k))).collect()
    }

    pub fn step_size(&self) -> Rational {
        self.step()
    }
}

impl fmt::Display for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.name();
        let mut first = true;
        for (e, c) in self.terms() {
            let cs = c.to_string();
            let wrapped = if c.numer().len() > 1 || !c.denom().is_one() {
                format!("({cs})")
            } else {
                cs
            };
            let mono = if e.is_zero() {
                String::new()
            } else if e.is_one() {
                v.to_string()
            } else if e.is_integer() && !e.is_negative() {
                format!("{v}^{}", fmt_rational(&e))
            } else {
                format!("{v}^({})", fmt_rational(&e))
            };
            let body = match (mono.is_empty(), wrapped.as_str()) {
                (true, _) => wrapped.clone(),
                (false, "1") => mono,
                (false, "-1") => format!("-{mono}"),
                (false, _) => format!("{wrapped}*{mono}"),
            };
            if first {
                f.write_str(&body)?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        if let Some(t) = self.trunc_order() {
            if first {
                write!(f, "O({v}^{})", fmt_rational(&t))?;
            } else {
                write!(f, " + O({v}^{})", fmt_rational(&t))?;
            }
        } else if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PuiseuxSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PuiseuxSeries({self})")
    }
}

/// `radicand^(-1/2) * series`, keeping a non-square constant outside the
/// series so every coefficient stays in the parameter field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSqrt {
    pub radicand: ParamScalar,
    pub series: PuiseuxSeries,
}

/// Series `s` with `s^2 * p = 1` through `order` (exclusive).
pub fn series_sqrt_inverse(p: &UniPoly, order: &Rational) -> Result<InverseSqrt> {
    if p.is_zero() {
        return Err(Error::Domain("inverse square root of zero".into()));
    }
    let ps = PuiseuxSeries::from_unipoly(p);
    let lead = ps.lead_exp().expect("nonzero");
    // slots needed: exponents from -lead/2 up to order, step 1
    let span = (order + &lead / int(2)).ceil().to_integer();
    let terms = usize::try_from(span).unwrap_or(0).max(1);
    let (c, mut s) = ps.normalized_power(&Rational::new((-1).into(), 2.into()), terms)?;
    let radicand = match c.sqrt() {
        Some(r) => {
            s = s.scale(&r.inv()?);
            ParamScalar::one()
        }
        None => c,
    };
    let series = s.truncate(order)?;
    Ok(InverseSqrt { radicand, series })
}

/// `s0 + s1 * ln(x)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LogSeries {
    pub s0: PuiseuxSeries,
    pub s1: PuiseuxSeries,
}

impl LogSeries {
    pub fn new(s0: PuiseuxSeries, s1: PuiseuxSeries) -> Result<Self> {
        s0.check(&s1)?;
        Ok(Self { s0, s1 })
    }

    pub fn plain(s0: PuiseuxSeries) -> Self {
        let var = s0.var();
        Self {
            s0,
            s1: PuiseuxSeries::zero_exact(var),
        }
    }

    pub fn var(&self) -> Var {
        self.s0.var()
    }

    pub fn has_log(&self) -> bool {
        !self.s1.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Self {
            s0: self.s0.add(&o.s0)?,
            s1: self.s1.add(&o.s1)?,
        })
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        Self {
            s0: self.s0.scale(c),
            s1: self.s1.scale(c),
        }
    }

    /// `(s0 + s1 ln x)' = s0' + s1/x + s1' ln x`.
    pub fn derivative(&self) -> Result<Self> {
        Ok(Self {
            s0: self.s0.derivative().add(&self.s1.mul_monomial(&int(-1)))?,
            s1: self.s1.derivative(),
        })
    }

    pub fn mul_series(&self, s: &PuiseuxSeries) -> Result<Self> {
        Ok(Self {
            s0: self.s0.mul(s)?,
            s1: self.s1.mul(s)?,
        })
    }

    /// Product of two log series; `ln^2` terms are not representable.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.has_log() && o.has_log() {
            return Err(Error::LogarithmicBasis);
        }
        Ok(Self {
            s0: self.s0.mul(&o.s0)?,
            s1: self.s1.mul(&o.s0)?.add(&self.s0.mul(&o.s1)?)?,
        })
    }

    pub fn truncate(&self, bound: &Rational) -> Result<Self> {
        Ok(Self {
            s0: self.s0.truncate(bound)?,
            s1: if self.s1.is_zero() && self.s1.is_exact() {
                self.s1.clone()
            } else {
                self.s1.truncate(bound)?
            },
        })
    }
}

impl fmt::Display for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.has_log() {
            write!(f, "{} + ln({})*({})", self.s0, self.var(), self.s1)
        } else {
            write!(f, "{}", self.s0)
        }
    }
}
