use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::poly::gcd;
use crate::algebra::rational::fmt_rational;
use crate::algebra::{ParamPolynomial, ParamScalar, Rational, Sym};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    Branching,
    TraceTranscendence,
    Logarithm,
    Residue(u8),
    /// A listed inequality of a theorem sub-case holds.
    CaseCondition,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionKind::Branching => f.write_str("branching"),
            ObstructionKind::TraceTranscendence => f.write_str("trace-transcendence"),
            ObstructionKind::Logarithm => f.write_str("logarithm"),
            ObstructionKind::Residue(l) => write!(f, "residue-level-{l}"),
            ObstructionKind::CaseCondition => f.write_str("case-condition"),
        }
    }
}

/// `constant * prod factor^mult`, equal to the numerator of a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingLocus {
    pub constant: Rational,
    pub factors: Vec<(ParamPolynomial, u32)>,
}

impl VanishingLocus {
    /// Splits off the rational content and the monomial part, then the
    /// repeated part of what is left via `gcd(p, dp/ds)`.
    pub fn factor(p: &ParamPolynomial) -> Self {
        if p.is_zero() {
            return Self {
                constant: Rational::zero(),
                factors: vec![],
            };
        }
        let constant = p.rational_content();
        let mut rest = p.scale(&constant.recip());
        let mut factors = Vec::new();
        for s in rest.symbols() {
            let k = rest.terms().map(|(m, _)| m.exp(s)).min().unwrap_or(0);
            if k > 0 {
                let mono = ParamPolynomial::var(s).pow(k as u32);
                rest = rest.div_exact(&mono).expect("monomial divides");
                factors.push((ParamPolynomial::var(s), k as u32));
            }
        }
        match rest.as_constant() {
            Some(c) => Self {
                constant: constant * c,
                factors,
            },
            None => {
                factors.extend(split_repeated(&rest));
                Self { constant, factors }
            }
        }
    }

    pub fn product(&self) -> ParamPolynomial {
        let mut acc = ParamPolynomial::constant(self.constant.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }

    pub fn is_identically_zero(&self) -> bool {
        self.constant.is_zero()
    }
}

/// One round of squarefree splitting in the first symbol; good enough
/// to expose repeated linear factors.
fn split_repeated(p: &ParamPolynomial) -> Vec<(ParamPolynomial, u32)> {
    let Some(&s) = p.symbols().first() else {
        return vec![(p.clone(), 1)];
    };
    let g = gcd(p, &p.derivative(s));
    if g.is_constant() {
        return vec![(normalize_sign(p), 1)];
    }
    let q = p.div_exact(&g).expect("gcd divides");
    // g carries every repeated factor once less
    let mut out = Vec::new();
    let inner = split_repeated(&g);
    let mut core = q.clone();
    for (f, m) in inner {
        if let Some(d) = core.div_exact(&f) {
            core = d;
            out.push((f, m + 1));
        } else {
            out.push((f, m));
        }
    }
    if !core.is_constant() {
        out.insert(0, (normalize_sign(&core), 1));
    }
    out
}

fn normalize_sign(p: &ParamPolynomial) -> ParamPolynomial {
    p.scale(&p.rational_content().recip())
}

impl fmt::Display for VanishingLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constant.is_zero() {
            return f.write_str("0 (identically)");
        }
        let mut parts = Vec::new();
        if !self.constant.is_one() || self.factors.is_empty() {
            parts.push(fmt_rational(&self.constant));
        }
        for (p, m) in &self.factors {
            let s = if p.len() > 1 { format!("({p})") } else { p.to_string() };
            parts.push(if *m > 1 { format!("{s}^{m}") } else { s });
        }
        f.write_str(&parts.join("*"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub label: String,
    pub value: ParamScalar,
    pub locus: Option<VanishingLocus>,
}

impl Obstruction {
    pub fn new(kind: ObstructionKind, label: impl Into<String>, value: ParamScalar) -> Self {
        let locus = if value.symbols().is_empty() {
            None
        } else {
            Some(VanishingLocus::factor(value.numer()))
        };
        Self {
            kind,
            label: label.into(),
            value,
            locus,
        }
    }

    pub fn is_nonzero(&self) -> bool {
        !self.value.is_zero()
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]: {}", self.kind, self.label, self.value)?;
        if let Some(l) = &self.locus {
            write!(f, "  (vanishes on {l} = 0)")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    NonIntegrable,
    Inconclusive,
    Separable,
    /// The test does not apply to these parameters.
    Skipped,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::NonIntegrable => "NonIntegrable",
            Outcome::Inconclusive => "Inconclusive",
            Outcome::Separable => "Separable",
            Outcome::Skipped => "Skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub case_id: String,
    pub obstructions: Vec<Obstruction>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn non_integrable(case_id: impl Into<String>, obstructions: Vec<Obstruction>) -> Self {
        debug_assert!(obstructions.iter().any(Obstruction::is_nonzero));
        Self {
            outcome: Outcome::NonIntegrable,
            case_id: case_id.into(),
            obstructions,
            note: None,
        }
    }

    pub fn inconclusive(case_id: impl Into<String>) -> Self {
        Self {
            outcome: Outcome::Inconclusive,
            case_id: case_id.into(),
            obstructions: vec![],
            note: None,
        }
    }

    pub fn separable() -> Self {
        Self {
            outcome: Outcome::Separable,
            case_id: "separable".into(),
            obstructions: vec![],
            note: None,
        }
    }

    pub fn skipped(case_id: impl Into<String>, why: impl Into<String>) -> Self {
        Self {
            outcome: Outcome::Skipped,
            case_id: case_id.into(),
            obstructions: vec![],
            note: Some(why.into()),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_obstructions(mut self, obs: Vec<Obstruction>) -> Self {
        self.obstructions = obs;
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.outcome, self.case_id)
    }
}

/// Substitutes explicit rationals into a witness.
pub fn eval_witness(w: &ParamScalar, point: &[(Sym, Rational)]) -> crate::Result<ParamScalar> {
    w.eval_all(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_scalar;

    fn poly(src: &str) -> ParamPolynomial {
        parse_scalar(src).unwrap().numer().clone()
    }

    #[test]
    fn factors_multiply_back() {
        for src in ["32/225*(A - B)*B*(A^2 - 17/8*A*B - 9/512*B^2)", "A/343", "16*A - 5*B", "(A - B)^2*B^3*h"] {
            let p = poly(src);
            let l = VanishingLocus::factor(&p);
            assert_eq!(l.product(), p, "{src}");
        }
    }

    #[test]
    fn monomial_and_repeated_parts() {
        let l = VanishingLocus::factor(&poly("(A - B)^2*B^3"));
        assert!(l.factors.contains(&(ParamPolynomial::var(Sym::B), 3)));
        assert!(l.factors.iter().any(|(_, m)| *m == 2));
    }
}
