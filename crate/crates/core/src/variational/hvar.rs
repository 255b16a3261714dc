//! Right-hand sides of the higher variational equations.
//!
//! Substituting `r = sum_k eps^k xi_k1`, `z = z0 + sum_k eps^k xi_k2` into
//! the force `-grad V` and collecting `eps^L` gives `J xi_L + K_L`, where
//! `J` is the first-variation operator and `K_L` is a polynomial in the
//! lower-level unknowns with coefficients polynomial in `z0`.

use std::collections::BTreeMap;
use std::fmt;

use super::params::HamiltonianParams;
use crate::algebra::{ParamScalar, UniPoly, Var};
use crate::error::{Error, Result};

/// The unknown `xi_{level, comp}`; `comp` 1 is `r`, 2 is `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Xi {
    pub level: u8,
    pub comp: u8,
}

impl Xi {
    pub fn new(level: u8, comp: u8) -> Self {
        Self { level, comp }
    }
}

impl fmt::Display for Xi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi{}{}", self.level, self.comp)
    }
}

/// Polynomial in the `Xi` unknowns with coefficients in `Q(params)[z0]`.
/// Keys are sorted monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Form {
    terms: BTreeMap<Vec<Xi>, UniPoly>,
}

impl Form {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: UniPoly) -> Self {
        let mut f = Self::zero();
        f.add_term(vec![], c);
        f
    }

    pub fn unknown(x: Xi) -> Self {
        let mut f = Self::zero();
        f.add_term(vec![x], UniPoly::one(Var::Z));
        f
    }

    fn add_term(&mut self, mut mono: Vec<Xi>, c: UniPoly) {
        if c.is_zero() {
            return;
        }
        mono.sort();
        let e = self
            .terms
            .entry(mono.clone())
            .or_insert_with(|| UniPoly::zero(Var::Z));
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Xi>, &UniPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, o: &Form) -> Form {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Form) -> Form {
        let mut out = Form::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let mut m = ma.clone();
                m.extend_from_slice(mb);
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &ParamScalar) -> Form {
        let mut out = Form::zero();
        for (m, p) in &self.terms {
            out.add_term(m.clone(), p.scale(c));
        }
        out
    }

    /// Keeps monomials for which `keep` holds.
    pub fn filter(&self, keep: impl Fn(&[Xi]) -> bool) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn unknowns(&self) -> Vec<Xi> {
        let mut v: Vec<Xi> = self.terms.keys().flatten().copied().collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
            let mono = m.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("*");
            let cs = c.to_string().replace('z', "z0");
            let compound = c.coeffs().iter().filter(|x| !x.is_zero()).count() > 1
                || c.degree().unwrap_or(0) > 0 && !c.lc().is_one();
            let body = match (cs.as_str(), mono.is_empty()) {
                (_, true) => cs.clone(),
                ("1", false) => mono,
                ("-1", false) => format!("-{mono}"),
                (_, false) if compound => format!("({cs})*{mono}"),
                (_, false) => format!("{cs}*{mono}"),
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
        Ok(())
    }
}

/// `K_level^(1)` (the `r` component) and `K_level^(2)` (the `z` component).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherVariationRHS {
    pub level: u8,
    pub components: [Form; 2],
}

impl HigherVariationRHS {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Form::is_zero)
    }
}

impl fmt::Display for HigherVariationRHS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "K{l}(1) = {}; K{l}(2) = {}",
            self.components[0],
            self.components[1],
            l = self.level
        )
    }
}

/// Polynomial in `eps` truncated above `eps^max`.
struct EpsPoly(Vec<Form>);

impl EpsPoly {
    fn one(max: usize) -> Self {
        let mut v = vec![Form::zero(); max + 1];
        v[0] = Form::constant(UniPoly::one(Var::Z));
        EpsPoly(v)
    }

    fn mul(&self, o: &EpsPoly) -> EpsPoly {
        let max = self.0.len() - 1;
        let mut out = vec![Form::zero(); max + 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate().take(max + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        EpsPoly(out)
    }
}

/// Multilinear forms of the level-`level` equations.
pub fn hvar_rhs(params: &HamiltonianParams, level: u8) -> Result<HigherVariationRHS> {
    if !(2..=3).contains(&level) {
        return Err(Error::Domain(format!("variation level {level} not in {{2, 3}}")));
    }
    let max = level as usize;
    let mut r = EpsPoly(vec![Form::zero(); max + 1]);
    let mut z = EpsPoly(vec![Form::zero(); max + 1]);
    z.0[0] = Form::constant(UniPoly::identity(Var::Z));
    for k in 1..=max {
        r.0[k] = Form::unknown(Xi::new(k as u8, 1));
        z.0[k] = Form::unknown(Xi::new(k as u8, 2));
    }
    let power = |base: &EpsPoly, n: u32| {
        let mut acc = EpsPoly::one(max);
        for _ in 0..n {
            acc = acc.mul(base);
        }
        acc
    };
    let forces = params.force_terms();
    let mut components = [Form::zero(), Form::zero()];
    for (slot, terms) in components.iter_mut().zip(forces.iter()) {
        let mut acc = Form::zero();
        for (c, i, j) in terms {
            let t = power(&r, *i).mul(&power(&z, *j));
            acc = acc.add(&t.0[max].scale(c));
        }
        // terms containing a level-`max` unknown form the linear operator
        *slot = acc.filter(|m| m.iter().all(|x| x.level < level));
    }
    Ok(HigherVariationRHS { level, components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Sym;

    fn c0_first() -> HamiltonianParams {
        HamiltonianParams::symbolic()
            .with(Sym::C, 1)
            .with(Sym::D, 3)
            .with(Sym::E, 0)
            .with(Sym::F, 0)
            .with(Sym::G, 0)
    }

    #[test]
    fn cubic_forms() {
        let k2 = hvar_rhs(&c0_first(), 2).unwrap();
        assert_eq!(k2.components[0].to_string(), "-6*xi11*xi12");
        assert_eq!(k2.components[1].to_string(), "-3*xi11*xi11 - 3*xi12*xi12");
        let k3 = hvar_rhs(&c0_first(), 3).unwrap();
        assert_eq!(k3.components[0].to_string(), "-6*xi11*xi22 - 6*xi12*xi21");
        assert_eq!(k3.components[1].to_string(), "-6*xi11*xi21 - 6*xi12*xi22");
    }

    #[test]
    fn quadratic_potential_has_no_higher_terms() {
        let p = HamiltonianParams::symbolic()
            .with(Sym::C, 0)
            .with(Sym::D, 0)
            .with(Sym::E, 0)
            .with(Sym::F, 0)
            .with(Sym::G, 0);
        assert!(hvar_rhs(&p, 2).unwrap().is_zero());
        assert!(hvar_rhs(&p, 3).unwrap().is_zero());
    }

    #[test]
    fn quartic_terms_carry_z0() {
        let p = HamiltonianParams::symbolic();
        let k2 = hvar_rhs(&p, 2).unwrap();
        assert!(k2.components[1].terms().any(|(_, c)| c.degree() == Some(1)));
        assert!(hvar_rhs(&p, 4).is_err());
    }
}
