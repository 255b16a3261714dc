use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::poly::{gcd, ParamPolynomial};
use super::rational::Rational;
use super::symbol::Sym;
use crate::error::{Error, Result};

/// Element of the rational function field `Q(A, ..., G, h, ...)`.
///
/// Canonical form: `gcd(num, den) = 1` and `den` has lex-leading
/// coefficient one, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParamScalar {
    num: ParamPolynomial,
    den: ParamPolynomial,
}

impl Default for ParamScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl ParamScalar {
    pub fn zero() -> Self {
        Self {
            num: ParamPolynomial::zero(),
            den: ParamPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(c: Rational) -> Self {
        Self {
            num: ParamPolynomial::constant(c),
            den: ParamPolynomial::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn sym(s: Sym) -> Self {
        Self::from_poly(ParamPolynomial::var(s))
    }

    pub fn from_poly(p: ParamPolynomial) -> Self {
        Self {
            num: p,
            den: ParamPolynomial::one(),
        }
    }

    pub fn new(num: ParamPolynomial, den: ParamPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: ParamPolynomial, den: ParamPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let Some(c) = den.as_constant() {
            if c.is_one() {
                return Self {
                    num,
                    den: ParamPolynomial::one(),
                };
            }
            return Self {
                num: num.scale(&c.recip()),
                den: ParamPolynomial::one(),
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &ParamPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &ParamPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// The rational value when no symbol occurs.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn as_poly(&self) -> Option<&ParamPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.num.contains(s) || self.den.contains(s)
    }

    pub fn symbols(&self) -> Vec<Sym> {
        Sym::ALL
            .iter()
            .copied()
            .filter(|&s| self.contains(s))
            .collect()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &ParamScalar) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let n = n as u32;
        Ok(Self {
            num: self.num.pow(n),
            den: self.den.pow(n),
        })
    }

    /// Substitutes a symbol; fails when the denominator vanishes.
    pub fn substitute(&self, s: Sym, value: &ParamScalar) -> Result<Self> {
        if !self.contains(s) {
            return Ok(self.clone());
        }
        let num = subst_poly(&self.num, s, value);
        let den = subst_poly(&self.den, s, value);
        num.checked_div(&den)
    }

    pub fn eval(&self, s: Sym, value: &Rational) -> Result<Self> {
        self.substitute(s, &ParamScalar::from_rational(value.clone()))
    }

    pub fn eval_all(&self, values: &[(Sym, Rational)]) -> Result<Self> {
        let mut acc = self.clone();
        for (s, v) in values {
            acc = acc.eval(*s, v)?;
        }
        Ok(acc)
    }

    /// Exact square root when numerator and denominator are squares.
    pub fn sqrt(&self) -> Option<Self> {
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        Some(Self::normalized(n, d))
    }

    pub fn derivative(&self, s: Sym) -> Self {
        // (n/d)' = (n'd - nd')/d^2
        let n1 = &(&self.num.derivative(s) * &self.den) - &(&self.num * &self.den.derivative(s));
        Self::normalized(n1, &self.den * &self.den)
    }
}

fn subst_poly(p: &ParamPolynomial, s: Sym, value: &ParamScalar) -> ParamScalar {
    let coeffs = p.coeffs_in(s);
    let mut acc = ParamScalar::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * value) + &ParamScalar::from_poly(c.clone());
    }
    acc
}

impl fmt::Display for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &ParamPolynomial| {
            if p.len() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for ParamScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamScalar({self})")
    }
}

impl<'a> Add<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn add(self, o: &ParamScalar) -> ParamScalar {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            let num = &self.num + &o.num;
            if self.den.is_one() {
                return ParamScalar::from_poly(num);
            }
            return ParamScalar::normalized(num, self.den.clone());
        }
        let num = &(&self.num * &o.den) + &(&o.num * &self.den);
        ParamScalar::normalized(num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn sub(self, o: &ParamScalar) -> ParamScalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    fn mul(self, o: &ParamScalar) -> ParamScalar {
        if self.is_zero() || o.is_zero() {
            return ParamScalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return ParamScalar::from_poly(&self.num * &o.num);
        }
        // cross-cancel before multiplying
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = o.den.div_exact(&g1).expect("gcd divides");
        let n2 = o.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        ParamScalar::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl<'a> Div<&'a ParamScalar> for &'a ParamScalar {
    type Output = ParamScalar;
    /// Panics on division by zero; use [`ParamScalar::checked_div`] when
    /// the divisor may vanish.
    fn div(self, o: &ParamScalar) -> ParamScalar {
        self.checked_div(o).expect("division by zero ParamScalar")
    }
}

impl Neg for &ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        ParamScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for ParamScalar {
    type Output = ParamScalar;
    fn neg(self) -> ParamScalar {
        -&self
    }
}

impl AddAssign<&ParamScalar> for ParamScalar {
    fn add_assign(&mut self, o: &ParamScalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&ParamScalar> for ParamScalar {
    fn sub_assign(&mut self, o: &ParamScalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&ParamScalar> for ParamScalar {
    fn mul_assign(&mut self, o: &ParamScalar) {
        *self = &*self * o;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: ParamScalar) -> ParamScalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&ParamScalar> for ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: &ParamScalar) -> ParamScalar {
                (&self).$m(o)
            }
        }
        impl $tr<ParamScalar> for &ParamScalar {
            type Output = ParamScalar;
            fn $m(self, o: ParamScalar) -> ParamScalar {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<Rational> for ParamScalar {
    fn from(c: Rational) -> Self {
        ParamScalar::from_rational(c)
    }
}

impl From<Sym> for ParamScalar {
    fn from(s: Sym) -> Self {
        ParamScalar::sym(s)
    }
}

impl From<i64> for ParamScalar {
    fn from(n: i64) -> Self {
        ParamScalar::from_int(n)
    }
}

impl From<i32> for ParamScalar {
    fn from(n: i32) -> Self {
        ParamScalar::from_int(n as i64)
    }
}

impl From<ParamPolynomial> for ParamScalar {
    fn from(p: ParamPolynomial) -> Self {
        ParamScalar::from_poly(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn s(x: Sym) -> ParamScalar {
        ParamScalar::sym(x)
    }

    #[test]
    fn canonical_fractions() {
        let a = s(Sym::A);
        let b = s(Sym::B);
        // (A^2 - B^2)/(2A - 2B) = (A + B)/2
        let n = &(&a * &a) - &(&b * &b);
        let d = (&a - &b).scale(&rat(2, 1));
        let q = &n / &d;
        assert_eq!(q, (&a + &b).scale(&rat(1, 2)));
        assert!(q.denom().is_one());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = s(Sym::A);
        let h = s(Sym::H);
        let x = &(&a + &h) / &(&(&a * &h) - &ParamScalar::from_int(3));
        let y = &x * &x.inv().unwrap();
        assert!(y.is_one());
        assert!(ParamScalar::zero().inv().is_err());
    }

    #[test]
    fn substitution_and_poles() {
        let a = s(Sym::A);
        let x = &ParamScalar::one() / &(&a - &ParamScalar::from_int(1));
        assert!(x.eval(Sym::A, &rat(1, 1)).is_err());
        assert_eq!(x.eval(Sym::A, &rat(3, 1)).unwrap().as_rational(), Some(rat(1, 2)));
    }

    #[test]
    fn display_is_canonical() {
        let a = s(Sym::A);
        let b = s(Sym::B);
        let x = &(&a - &b.scale(&rat(5, 16))) / &b;
        assert_eq!(x.to_string(), "(A - 5/16*B)/B");
    }
}
