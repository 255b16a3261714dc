use std::fmt;

use super::scalar::ParamScalar;
use super::series::PuiseuxSeries;
use super::symbol::Var;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Reduced quotient of two univariate polynomials; `den` is monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if num.var() != den.var() {
            return Err(Error::VariableMismatch(num.var().name(), den.var().name()));
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let var = num.var();
        if num.is_zero() {
            return Ok(Self::zero(var));
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let inv = den.lc().inv()?;
        Ok(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn zero(var: Var) -> Self {
        Self {
            num: UniPoly::zero(var),
            den: UniPoly::one(var),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.var();
        Self {
            num: p,
            den: UniPoly::one(var),
        }
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.var() != o.var() {
            return Err(Error::VariableMismatch(self.var().name(), o.var().name()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den.clone());
        }
        Self::new(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &ParamScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.var());
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn derivative(&self) -> Result<Self> {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(n, &self.den * &self.den)
    }

    /// Multiplies by `var^k` (negative `k` divides).
    pub fn mul_var_pow(&self, k: i32) -> Result<Self> {
        if k >= 0 {
            Self::new(self.num.mul_x_pow(k as usize), self.den.clone())
        } else {
            Self::new(self.num.clone(), self.den.mul_x_pow((-k) as usize))
        }
    }

    /// `f(1/x)` expressed in the reciprocal variable.
    pub fn compose_reciprocal(&self) -> Result<Self> {
        let nv = self.var().reciprocal();
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        // n(1/x) = rev(n)(x) / x^dn, likewise for d
        let num = self.num.reversed().with_var(nv);
        let den = self.den.reversed().with_var(nv);
        let (num, den) = if dd >= dn {
            (num.mul_x_pow(dd - dn), den)
        } else {
            (num, den.mul_x_pow(dn - dd))
        };
        Self::new(num, den)
    }

    /// `f(x + a)`.
    pub fn shift(&self, a: &ParamScalar) -> Result<Self> {
        Self::new(self.num.shift(a), self.den.shift(a))
    }

    pub fn eval(&self, x: &ParamScalar) -> Result<ParamScalar> {
        let d = self.den.eval(x);
        self.num.eval(x).checked_div(&d)
    }

    /// `lim_{var -> inf} var^k f`, or `None` when it diverges.
    pub fn limit_at_infinity(&self, k: usize) -> Option<ParamScalar> {
        if self.is_zero() {
            return Some(ParamScalar::zero());
        }
        let dn = self.num.degree()? + k;
        let dd = self.den.degree()?;
        match dn.cmp(&dd) {
            std::cmp::Ordering::Greater => None,
            std::cmp::Ordering::Less => Some(ParamScalar::zero()),
            std::cmp::Ordering::Equal => Some(&self.num.lc() / &self.den.lc()),
        }
    }

    /// Laurent expansion at 0 with `terms` coefficients starting from the
    /// leading exponent.
    pub fn laurent_at_zero(&self, terms: usize) -> Result<PuiseuxSeries> {
        let var = self.var();
        if self.is_zero() {
            return Ok(PuiseuxSeries::zero_exact(var));
        }
        let n = PuiseuxSeries::from_unipoly(&self.num);
        let d = PuiseuxSeries::from_unipoly(&self.den);
        let dinv = d.inverse(Some(terms))?;
        let out = n.mul(&dinv)?;
        let lead = out.lead_exp().expect("nonzero");
        out.truncate(&(lead + super::rational::int(terms as i64)))
    }

    pub fn pole_order_at_zero(&self) -> usize {
        let vd = self.den.valuation().unwrap_or(0);
        let vn = self.num.valuation().unwrap_or(0);
        vd.saturating_sub(vn)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.lc().is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::symbol::Sym;

    fn sc(n: i64) -> ParamScalar {
        ParamScalar::from_int(n)
    }

    #[test]
    fn reduces_common_factors() {
        // (z^2 - 1)/(2z - 2) = (z + 1)/2
        let n = UniPoly::new(Var::Z, vec![sc(-1), sc(0), sc(1)]);
        let d = UniPoly::new(Var::Z, vec![sc(-2), sc(2)]);
        let f = RationalFunction::new(n, d).unwrap();
        assert_eq!(f.den().degree(), Some(0));
        assert_eq!(f.num(), &UniPoly::new(Var::Z, vec![sc(1), sc(1)]).scale(&ParamScalar::from_rational(crate::algebra::rational::rat(1, 2))));
    }

    #[test]
    fn reciprocal_is_involution() {
        let b = ParamScalar::sym(Sym::B);
        let n = UniPoly::new(Var::Z, vec![b.clone(), sc(3)]);
        let d = UniPoly::new(Var::Z, vec![sc(1), sc(0), b, sc(1)]);
        let f = RationalFunction::new(n, d).unwrap();
        let g = f.compose_reciprocal().unwrap();
        assert_eq!(g.var(), Var::X);
        assert_eq!(g.compose_reciprocal().unwrap(), f);
    }

    #[test]
    fn limits() {
        let n = UniPoly::new(Var::Z, vec![sc(0), sc(3)]);
        let d = UniPoly::new(Var::Z, vec![sc(1), sc(0), sc(2)]);
        let f = RationalFunction::new(n, d).unwrap();
        assert_eq!(f.limit_at_infinity(1).unwrap(), ParamScalar::from_rational(crate::algebra::rational::rat(3, 2)));
        assert!(f.limit_at_infinity(2).is_none());
        assert!(f.limit_at_infinity(0).unwrap().is_zero());
    }
}
