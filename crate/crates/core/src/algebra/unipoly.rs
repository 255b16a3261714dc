use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{gcd as mgcd, ParamPolynomial};
use super::rational::Rational;
use super::scalar::ParamScalar;
use super::series::PuiseuxSeries;
use super::symbol::{Sym, Var};
use crate::error::{Error, Result};

/// Dense univariate polynomial with `ParamScalar` coefficients,
/// ascending degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<ParamScalar>,
}

impl UniPoly {
    pub fn new(var: Var, mut coeffs: Vec<ParamScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Self { var, coeffs: vec![] }
    }

    pub fn constant(var: Var, c: ParamScalar) -> Self {
        Self::new(var, vec![c])
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, ParamScalar::one())
    }

    /// The monomial `c * var^k`.
    pub fn monomial(var: Var, c: ParamScalar, k: usize) -> Self {
        let mut coeffs = vec![ParamScalar::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    pub fn identity(var: Var) -> Self {
        Self::monomial(var, ParamScalar::one(), 1)
    }

    pub fn from_rationals(var: Var, coeffs: &[Rational]) -> Self {
        Self::new(var, coeffs.iter().cloned().map(ParamScalar::from).collect())
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[ParamScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ParamScalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> ParamScalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero lc");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.var,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    pub fn eval(&self, x: &ParamScalar) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_series(&self, s: &PuiseuxSeries) -> Result<PuiseuxSeries> {
        let mut acc = PuiseuxSeries::zero_exact(s.var());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(s)?.add(&PuiseuxSeries::constant(s.var(), c.clone()))?;
        }
        Ok(acc)
    }

    pub fn mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![ParamScalar::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(self.var, coeffs)
    }

    /// `x^n * p(1/x)` with `n = deg p`: coefficient reversal.
    pub fn reversed(&self) -> Self {
        Self::new(self.var, self.coeffs.iter().rev().cloned().collect())
    }

    /// Taylor shift `p(x + a)`.
    pub fn shift(&self, a: &ParamScalar) -> Self {
        let lin = Self::new(self.var, vec![a.clone(), ParamScalar::one()]);
        let mut acc = Self::zero(self.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(self.var, c.clone());
        }
        acc
    }

    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.degree().unwrap();
        let inv = d.lc().inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let mut q = vec![ParamScalar::zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = &r[k] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k - dd + i] -= &(&c * dc);
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        Ok((Self::new(self.var, q), Self::new(self.var, r)))
    }

    pub fn div_exact(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Domain(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    /// Embeds into `Q[params, Var]` after clearing denominators.
    /// Returns the polynomial and the scalar that was multiplied in.
    fn to_multivariate(&self) -> (ParamPolynomial, ParamPolynomial) {
        let mut den = ParamPolynomial::one();
        for c in &self.coeffs {
            let d = c.denom();
            if !d.is_one() {
                let g = mgcd(&den, d);
                den = &den * &d.div_exact(&g).expect("gcd divides");
            }
        }
        let mut out = ParamPolynomial::zero();
        let x = ParamPolynomial::var(Sym::Var);
        let mut xp = ParamPolynomial::one();
        for c in &self.coeffs {
            let scaled = &(c.numer() * &den).div_exact(c.denom()).expect("lcm");
            out += &(scaled * &xp);
            xp = &xp * &x;
        }
        (out, den)
    }

    fn from_multivariate(var: Var, p: &ParamPolynomial) -> Self {
        Self::new(
            var,
            p.coeffs_in(Sym::Var)
                .into_iter()
                .map(ParamScalar::from_poly)
                .collect(),
        )
    }

    /// Monic gcd over the parameter field.
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.degree() == Some(0) || o.degree() == Some(0) {
            return Self::one(self.var);
        }
        let (a, _) = self.to_multivariate();
        let (b, _) = o.to_multivariate();
        let g = mgcd(&a, &b);
        Self::from_multivariate(self.var, &g).monic()
    }

    /// True when `gcd(p, p')` is a unit.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }

    pub fn substitute_param(&self, s: Sym, v: &ParamScalar) -> Result<Self> {
        Ok(Self::new(
            self.var,
            self.coeffs
                .iter()
                .map(|c| c.substitute(s, v))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn all_coeffs_rational(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.as_rational()).collect()
    }

    /// Rational roots of a polynomial with explicit rational coefficients.
    /// Returns `None` when the coefficients are symbolic or the search
    /// space is too large.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Signed;
        let coeffs = self.all_coeffs_rational()?;
        let mut roots = Vec::new();
        let v = self.valuation()?;
        if v > 0 {
            roots.push(Rational::zero());
        }
        let coeffs = &coeffs[v..];
        if coeffs.len() <= 1 {
            return Some(roots);
        }
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let limit = BigInt::from(1_000_000u32);
        if a0 > limit || an > limit {
            return None;
        }
        let divisors = |n: &BigInt| -> Vec<BigInt> {
            let mut out = Vec::new();
            let mut i = BigInt::one();
            while &i * &i <= *n {
                if (n % &i).is_zero() {
                    out.push(i.clone());
                    let j = n / &i;
                    if j != i {
                        out.push(j);
                    }
                }
                i += 1;
            }
            out
        };
        let eval = |r: &Rational| {
            coeffs
                .iter()
                .rev()
                .fold(Rational::zero(), |acc, c| acc * r + c)
        };
        let mut found = Vec::new();
        for p in divisors(&a0) {
            for q in divisors(&an) {
                for sign in [1i32, -1] {
                    let r = Rational::new(&p * BigInt::from(sign), q.clone());
                    if !found.contains(&r) && eval(&r).is_zero() {
                        found.push(r);
                    }
                }
            }
        }
        found.sort();
        roots.extend(found);
        Some(roots)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let compound = c.numer().len() > 1 || !c.denom().is_one();
            let body = match k {
                0 => cs.clone(),
                _ => {
                    let pow = if k == 1 {
                        self.var.name().to_string()
                    } else {
                        format!("{}^{}", self.var, k)
                    };
                    if c.is_one() {
                        pow
                    } else if cs == "-1" {
                        format!("-{pow}")
                    } else if compound {
                        format!("({cs})*{pow}")
                    } else {
                        format!("{cs}*{pow}")
                    }
                }
            };
            if first {
                f.write_str(&body)?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                if compound && k == 0 {
                    write!(f, " + ({body})")?;
                } else {
                    write!(f, " - {rest}")?;
                }
            } else if compound && k == 0 {
                write!(f, " + ({body})")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]({self})", self.var)
    }
}

impl<'a> Add<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(
            self.var,
            (0..n).map(|k| &self.coeff(k) + &o.coeff(k)).collect(),
        )
    }
}

impl<'a> Sub<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new(
            self.var,
            (0..n).map(|k| &self.coeff(k) - &o.coeff(k)).collect(),
        )
    }
}

impl<'a> Mul<&'a UniPoly> for &'a UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut out = vec![ParamScalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(self.var, out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn p(cs: &[i64]) -> UniPoly {
        UniPoly::new(Var::Z, cs.iter().map(|&c| ParamScalar::from_int(c)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (z-1)(z+2) and (z-1)(z-3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[-3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (q, r) = a.divrem(&p(&[-1, 1])).unwrap();
        assert_eq!(q, p(&[2, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn symbolic_gcd() {
        let h = ParamScalar::sym(Sym::H);
        // z^3 + h and its derivative are coprime for symbolic h
        let q = UniPoly::new(Var::Z, vec![h.clone(), 0.into(), 0.into(), 1.into()]);
        assert!(q.is_squarefree());
        // z^2 (z + B) is not
        let b = ParamScalar::sym(Sym::B);
        let q2 = UniPoly::new(Var::Z, vec![0.into(), 0.into(), b, 1.into()]);
        assert!(!q2.is_squarefree());
    }

    #[test]
    fn rational_root_search() {
        let a = &(&p(&[-1, 2]) * &p(&[3, 1])) * &p(&[0, 1]);
        let roots = a.rational_roots().unwrap();
        assert_eq!(roots, vec![int(0), int(-3), Rational::new(1.into(), 2.into())]);
    }

    #[test]
    fn shift_and_reverse() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.shift(&ParamScalar::from_int(1)), p(&[6, 8, 3]));
        assert_eq!(a.reversed(), p(&[3, 2, 1]));
    }
}
