//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors; the map order is
//! the lexicographic monomial order with `A > B > ... > Var`, which is also
//! the order used by division. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, Rational};
use super::symbol::{Sym, NSYMS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [u16; NSYMS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NSYMS])
    }

    pub fn var(s: Sym, e: u16) -> Self {
        let mut m = [0; NSYMS];
        m[s.index()] = e;
        Monomial(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn exp(&self, s: Sym) -> u16 {
        self.0[s.index()]
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a += *b;
        }
        Monomial(m)
    }

    pub fn checked_div(&self, o: &Monomial) -> Option<Monomial> {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Monomial(m))
    }

    fn with_exp(&self, s: Sym, e: u16) -> Monomial {
        let mut m = self.0;
        m[s.index()] = e;
        Monomial(m)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl ParamPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(s: Sym) -> Self {
        Self::term(Rational::one(), Monomial::var(s, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    /// The value of a constant polynomial (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lex-leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.terms.keys().any(|m| m.exp(s) > 0)
    }

    pub fn symbols(&self) -> Vec<Sym> {
        Sym::ALL.iter().copied().filter(|&s| self.contains(s)).collect()
    }

    pub fn degree_in(&self, s: Sym) -> u16 {
        self.terms.keys().map(|m| m.exp(s)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    fn insert_add(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, s: Sym) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(s);
            if e > 0 {
                out.insert_add(m.with_exp(s, e - 1), c * Rational::from_integer(BigInt::from(e)));
            }
        }
        out
    }

    /// Coefficients with respect to `s`, indexed by power.
    pub fn coeffs_in(&self, s: Sym) -> Vec<ParamPolynomial> {
        let deg = self.degree_in(s) as usize;
        let mut out = vec![Self::zero(); deg + 1];
        if self.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.exp(s) as usize;
            out[e].terms.insert(m.with_exp(s, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(s: Sym, coeffs: &[ParamPolynomial]) -> Self {
        let mut out = Self::zero();
        for (e, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                out.insert_add(m.with_exp(s, m.exp(s) + e as u16), v.clone());
            }
        }
        out
    }

    pub fn substitute(&self, s: Sym, value: &ParamPolynomial) -> Self {
        if !self.contains(s) {
            return self.clone();
        }
        let coeffs = self.coeffs_in(s);
        // Horner
        let mut acc = Self::zero();
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    pub fn eval(&self, s: Sym, value: &Rational) -> Self {
        self.substitute(s, &Self::constant(value.clone()))
    }

    /// Divides by the lex-leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients with positive leading coefficient.
    pub fn rational_content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading_coeff().is_negative() {
            content = -content;
        }
        content
    }

    /// Exact quotient `self / d` or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &ParamPolynomial) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = d.leading_term().map(|(m, c)| (*m, c.clone()))?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((rm, rc)) = r.leading_term().map(|(m, c)| (*m, c.clone())) {
            let m = rm.checked_div(&lm)?;
            let c = rc / &lc;
            r -= d.mul_term(&c, &m);
            q.insert_add(m, c);
        }
        Some(q)
    }

    /// Content with respect to `s`: gcd of the coefficients in `s`.
    pub fn content_in(&self, s: Sym) -> Self {
        let mut g = Self::zero();
        for c in self.coeffs_in(s).into_iter().rev() {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_in(&self, s: Sym) -> Self {
        let c = self.content_in(s);
        if c.is_zero() {
            return Self::zero();
        }
        self.div_exact(&c).expect("content divides")
    }

    pub fn eval_all(&self, values: &[(Sym, Rational)]) -> Self {
        values.iter().fold(self.clone(), |acc, (s, v)| acc.eval(*s, v))
    }

    /// Sorted terms in printing order: descending total degree, then lex.
    pub fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then(b.0.cmp(a.0)));
        v
    }

    /// Exact square root if this is the square of a polynomial.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (lm, lc) = self.leading_term()?;
        if lm.0.iter().any(|e| e % 2 == 1) {
            return None;
        }
        let root_c = super::rational::rational_sqrt(lc)?;
        let mut half = [0u16; NSYMS];
        for (h, e) in half.iter_mut().zip(lm.0.iter()) {
            *h = e / 2;
        }
        let lead = Monomial(half);
        let two_lead_c = &root_c * Rational::from_integer(2.into());
        let mut s = Self::term(root_c, lead);
        // Each correction term must have degree bounded by half the source.
        let bound = self.total_degree() / 2;
        let mut r = self - &(&s * &s);
        let mut guard = 0usize;
        while let Some((rm, rc)) = r.leading_term().map(|(m, c)| (*m, c.clone())) {
            let m = rm.checked_div(&lead)?;
            if m.degree() > bound || m >= lead {
                return None;
            }
            let t = Self::term(rc / &two_lead_c, m);
            s += t;
            r = self - &(&s * &s);
            guard += 1;
            if guard > 4 * self.len() + 16 {
                return None;
            }
        }
        Some(s)
    }
}

/// Greatest common divisor, normalized to lex-leading coefficient one.
///
/// Recursive content/primitive-part splitting over the first variable
/// present, with a primitive pseudo-remainder sequence in that variable.
pub fn gcd(a: &ParamPolynomial, b: &ParamPolynomial) -> ParamPolynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return ParamPolynomial::one();
    }
    if a == b {
        return a.monic();
    }
    let v = Sym::ALL
        .iter()
        .copied()
        .find(|&s| a.contains(s) || b.contains(s))
        .expect("non-constant");
    match (a.contains(v), b.contains(v)) {
        (true, false) => gcd(&a.content_in(v), b),
        (false, true) => gcd(a, &b.content_in(v)),
        _ => {
            let ca = a.content_in(v);
            let cb = b.content_in(v);
            let g = gcd(&ca, &cb);
            let pa = a.div_exact(&ca).expect("content divides");
            let pb = b.div_exact(&cb).expect("content divides");
            let h = prs_gcd(pa, pb, v);
            (&g * &h).monic()
        }
    }
}

fn prs_gcd(mut a: ParamPolynomial, mut b: ParamPolynomial, v: Sym) -> ParamPolynomial {
    loop {
        if a.degree_in(v) < b.degree_in(v) {
            std::mem::swap(&mut a, &mut b);
        }
        if b.is_zero() {
            return a.primitive_in(v);
        }
        let r = pseudo_rem(&a, &b, v);
        if r.is_zero() {
            return b.primitive_in(v);
        }
        if r.degree_in(v) == 0 {
            return ParamPolynomial::one();
        }
        a = b;
        b = r.primitive_in(v);
    }
}

/// A nonzero multiple (by a power of `lc_v(b)`) of the remainder of `a`
/// modulo `b` in the variable `v`.
fn pseudo_rem(a: &ParamPolynomial, b: &ParamPolynomial, v: Sym) -> ParamPolynomial {
    let bc = b.coeffs_in(v);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.coeffs_in(v);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, c) in bc.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    ParamPolynomial::from_coeffs_in(v, &r)
}

impl fmt::Display for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(fmt_rational(&abs));
            }
            for s in Sym::ALL {
                match m.exp(s) {
                    0 => {}
                    1 => parts.push(s.name().to_string()),
                    e => parts.push(format!("{}^{}", s.name(), e)),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPolynomial({self})")
    }
}

impl<'a> Add<&'a ParamPolynomial> for &'a ParamPolynomial {
    type Output = ParamPolynomial;
    fn add(self, o: &ParamPolynomial) -> ParamPolynomial {
        let mut out = self.clone();
        out += o;
        out
    }
}

impl<'a> Sub<&'a ParamPolynomial> for &'a ParamPolynomial {
    type Output = ParamPolynomial;
    fn sub(self, o: &ParamPolynomial) -> ParamPolynomial {
        let mut out = self.clone();
        out -= o;
        out
    }
}

impl AddAssign<&ParamPolynomial> for ParamPolynomial {
    fn add_assign(&mut self, o: &ParamPolynomial) {
        for (m, c) in &o.terms {
            self.insert_add(*m, c.clone());
        }
    }
}

impl AddAssign<ParamPolynomial> for ParamPolynomial {
    fn add_assign(&mut self, o: ParamPolynomial) {
        for (m, c) in o.terms {
            self.insert_add(m, c);
        }
    }
}

impl SubAssign<&ParamPolynomial> for ParamPolynomial {
    fn sub_assign(&mut self, o: &ParamPolynomial) {
        for (m, c) in &o.terms {
            self.insert_add(*m, -c.clone());
        }
    }
}

impl SubAssign<ParamPolynomial> for ParamPolynomial {
    fn sub_assign(&mut self, o: ParamPolynomial) {
        for (m, c) in o.terms {
            self.insert_add(m, -c);
        }
    }
}

impl<'a> Mul<&'a ParamPolynomial> for &'a ParamPolynomial {
    type Output = ParamPolynomial;
    fn mul(self, o: &ParamPolynomial) -> ParamPolynomial {
        if self.is_zero() || o.is_zero() {
            return ParamPolynomial::zero();
        }
        if let Some(c) = self.as_constant() {
            return o.scale(&c);
        }
        if let Some(c) = o.as_constant() {
            return self.scale(&c);
        }
        let mut out = ParamPolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.insert_add(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &ParamPolynomial {
    type Output = ParamPolynomial;
    fn neg(self) -> ParamPolynomial {
        ParamPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for ParamPolynomial {
    type Output = ParamPolynomial;
    fn neg(self) -> ParamPolynomial {
        -&self
    }
}

impl From<Sym> for ParamPolynomial {
    fn from(s: Sym) -> Self {
        ParamPolynomial::var(s)
    }
}

impl From<Rational> for ParamPolynomial {
    fn from(c: Rational) -> Self {
        ParamPolynomial::constant(c)
    }
}
