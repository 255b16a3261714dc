//! The case analysis over the quartic part `E z^4 + F r^2 z^2 + G r^4`.

use std::fmt;

use num_traits::{One, Zero};

use super::resonance::{branching_test, denominator_gate, resonance_parameter, ResonanceParameter};
use super::verdict::{Obstruction, ObstructionKind, Outcome, Verdict};
use crate::algebra::rational::{fmt_rational, int, rat};
use crate::algebra::{ParamScalar, Rational};
use crate::error::Result;
use crate::variational::HamiltonianParams;

/// Integrable homogeneous quartic the `(E, F, G)` triple is proportional to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuarticClass {
    V0,
    /// `z^4`
    V1Z,
    /// `r^4`
    V1R,
    /// `(r^2 + z^2)^2`
    V2,
    /// `r^4 + 6 r^2 z^2 + z^4`
    V3,
    /// `z^4 + (alpha/4) r^4`, both terms present
    V4 { alpha: Rational },
    /// `16 r^4 + F r^2 z^2 + z^4` with `F` in `{3, 12}`
    V5 { middle: Rational },
    /// `16 z^4 + F r^2 z^2 + r^4`
    V5Mirror { middle: Rational },
    /// `z^4 + 6 r^2 z^2 + 8 r^4`
    V6,
    /// `8 z^4 + 6 r^2 z^2 + r^4`
    V6Mirror,
    NoMatch,
}

impl QuarticClass {
    /// Theorem family for the class.
    pub fn family(&self) -> Option<&'static str> {
        Some(match self {
            QuarticClass::V0 => "c.0",
            QuarticClass::V1Z => "c.1",
            QuarticClass::V1R => "c.2",
            QuarticClass::V2 => "c.3",
            QuarticClass::V3 => "c.4",
            QuarticClass::V4 { .. } => "c.5",
            QuarticClass::V5 { .. } => "c.7",
            QuarticClass::V5Mirror { .. } => "c.8",
            QuarticClass::V6 => "c.9",
            QuarticClass::V6Mirror => "c.10",
            QuarticClass::NoMatch => return None,
        })
    }
}

impl fmt::Display for QuarticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuarticClass::V0 => f.write_str("V0 = 0"),
            QuarticClass::V1Z => f.write_str("V1 = z^4"),
            QuarticClass::V1R => f.write_str("V1 = r^4"),
            QuarticClass::V2 => f.write_str("V2 = (r^2 + z^2)^2"),
            QuarticClass::V3 => f.write_str("V3 = r^4 + 6r^2z^2 + z^4"),
            QuarticClass::V4 { alpha } => write!(f, "V4 = z^4 + (alpha/4)r^4, alpha = {}", fmt_rational(alpha)),
            QuarticClass::V5 { middle } => write!(f, "V5 = 16r^4 + {}r^2z^2 + z^4", fmt_rational(middle)),
            QuarticClass::V5Mirror { middle } => write!(f, "V5 = 16z^4 + {}r^2z^2 + r^4", fmt_rational(middle)),
            QuarticClass::V6 => f.write_str("V6 = z^4 + 6r^2z^2 + 8r^4"),
            QuarticClass::V6Mirror => f.write_str("V6 = 8z^4 + 6r^2z^2 + r^4"),
            QuarticClass::NoMatch => f.write_str("no listed quartic"),
        }
    }
}

/// `(e, f, g) = k * pattern` for some `k > 0`.
fn proportional(efg: [&Rational; 3], pattern: [i64; 3]) -> bool {
    let pivot = pattern.iter().position(|&x| x != 0).expect("nonzero pattern");
    let k = efg[pivot] / int(pattern[pivot]);
    k > Rational::zero() && efg.iter().zip(pattern).all(|(v, p)| **v == &k * int(p))
}

pub fn classify_quartic(e: &Rational, f: &Rational, g: &Rational) -> QuarticClass {
    let efg = [e, f, g];
    if efg.iter().all(|v| v.is_zero()) {
        return QuarticClass::V0;
    }
    let table: [([i64; 3], QuarticClass); 10] = [
        ([1, 0, 0], QuarticClass::V1Z),
        ([0, 0, 1], QuarticClass::V1R),
        ([1, 2, 1], QuarticClass::V2),
        ([1, 6, 1], QuarticClass::V3),
        ([1, 3, 16], QuarticClass::V5 { middle: int(3) }),
        ([1, 12, 16], QuarticClass::V5 { middle: int(12) }),
        ([16, 3, 1], QuarticClass::V5Mirror { middle: int(3) }),
        ([16, 12, 1], QuarticClass::V5Mirror { middle: int(12) }),
        ([1, 6, 8], QuarticClass::V6),
        ([8, 6, 1], QuarticClass::V6Mirror),
    ];
    for (pattern, class) in table {
        if proportional(efg, pattern) {
            return class;
        }
    }
    // the one-parameter family needs both end terms and no middle term
    if f.is_zero() && !e.is_zero() && !g.is_zero() && (e > &Rational::zero()) {
        return QuarticClass::V4 { alpha: int(4) * g / e };
    }
    QuarticClass::NoMatch
}

pub const OUTSIDE: &str = "OutsideTheorem";

/// The listed explicit parameters, as rationals.
struct P {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl P {
    fn ratio(&self) -> Option<Rational> {
        (!self.d.is_zero()).then(|| &self.c / &self.d)
    }
}

/// A sub-case whose inequality holds; the witness is the nonzero side.
fn fire(id: &str, condition: &str, witness: Rational) -> Verdict {
    Verdict::non_integrable(
        id,
        vec![Obstruction::new(
            ObstructionKind::CaseCondition,
            condition,
            ParamScalar::from_rational(witness),
        )],
    )
}

fn ne(x: Rational) -> Option<Rational> {
    (!x.is_zero()).then_some(x)
}

type Rule = (&'static str, &'static str, fn(&P) -> Option<Option<Rational>>);

/// Each rule returns `None` when its premises fail, `Some(None)` when the
/// premises hold but the inequality does not, and `Some(Some(w))` when it
/// fires with nonzero witness `w`.
fn evaluate_rules(family: &str, rules: &[Rule], p: &P) -> Verdict {
    let mut covered = false;
    for (id, cond, rule) in rules {
        match rule(p) {
            Some(Some(w)) => return fire(id, cond, w),
            Some(None) => covered = true,
            None => {}
        }
    }
    if covered {
        Verdict::inconclusive(family)
    } else {
        Verdict::inconclusive(OUTSIDE).with_note(format!("{family}: no listed sub-case covers these parameters"))
    }
}

fn ratio_is(p: &P, r: Rational) -> bool {
    p.ratio() == Some(r)
}

fn third() -> Rational {
    rat(1, 3)
}

fn sixteen_thirds() -> Rational {
    rat(16, 3)
}

fn ratio_outside(p: &P, set: &[Rational]) -> Option<Option<Rational>> {
    let r = p.ratio()?;
    if set.contains(&r) {
        return None;
    }
    // witness: D itself, nonzero by premise
    Some(Some(p.d.clone()))
}

fn both_zero(p: &P) -> bool {
    p.c.is_zero() && p.d.is_zero()
}

fn c0_rules() -> Vec<Rule> {
    vec![
        ("c.01", "D != 0, C/D not in {1/3, 2, 16/3}", |p| {
            ratio_outside(p, &[third(), int(2), sixteen_thirds()])
        }),
        ("c.02", "D != 0, C/D = 1/3, A != B", |p| {
            ratio_is(p, third()).then(|| ne(&p.a - &p.b))
        }),
        ("c.03", "D != 0, C/D = 16/3, 16A != 5B", |p| {
            ratio_is(p, sixteen_thirds()).then(|| ne(int(16) * &p.a - int(5) * &p.b))
        }),
        // C/D = 2 has no listed inequality: covered, never fires
        ("c.0", "D != 0, C/D = 2", |p| ratio_is(p, int(2)).then_some(None)),
    ]
}

fn c3_rules() -> Vec<Rule> {
    vec![
        ("c.31", "D != 0, C/D not in {1/3, 2, 16/3}", |p| {
            ratio_outside(p, &[third(), int(2), sixteen_thirds()])
        }),
        ("c.32", "D != 0, C/D = 1/3, A != B", |p| {
            ratio_is(p, third()).then(|| ne(&p.a - &p.b))
        }),
        ("c.33", "D != 0, C/D = 1/3, A = B, then A != 0 and 4A != 15D^2", |p| {
            (ratio_is(p, third()) && p.a == p.b).then(|| {
                let w = int(4) * &p.a - int(15) * &p.d * &p.d;
                (!p.a.is_zero() && !w.is_zero()).then_some(&p.a * &w)
            })
        }),
        ("c.34", "D != 0, C/D = 2, D^2 != B - 2A", |p| {
            ratio_is(p, int(2)).then(|| ne(&p.d * &p.d - &p.b + int(2) * &p.a))
        }),
        ("c.35", "D != 0, C/D = 16/3, 16A != 5B", |p| {
            ratio_is(p, sixteen_thirds()).then(|| ne(int(16) * &p.a - int(5) * &p.b))
        }),
        ("c.36", "D != 0, C/D = 16/3, 16A = 5B, 20A != -63D^2", |p| {
            (ratio_is(p, sixteen_thirds()) && int(16) * &p.a == int(5) * &p.b)
                .then(|| ne(int(20) * &p.a + int(63) * &p.d * &p.d))
        }),
    ]
}

fn c4_rules() -> Vec<Rule> {
    vec![
        ("c.41", "D != 0, C/D not in {1/3, 2, 16/3}", |p| {
            ratio_outside(p, &[third(), int(2), sixteen_thirds()])
        }),
        ("c.42", "D != 0, C/D = 1/3, A != B", |p| {
            ratio_is(p, third()).then(|| ne(&p.a - &p.b))
        }),
        ("c.43", "D != 0, C/D = 2, D^2 != B - 2A", |p| {
            ratio_is(p, int(2)).then(|| ne(&p.d * &p.d - &p.b + int(2) * &p.a))
        }),
        ("c.44", "D != 0, C/D = 16/3, 16A != 5B", |p| {
            ratio_is(p, sixteen_thirds()).then(|| ne(int(16) * &p.a - int(5) * &p.b))
        }),
        ("c.45", "D != 0, C/D = 16/3, 16A = 5B, 20A != -63D^2", |p| {
            (ratio_is(p, sixteen_thirds()) && int(16) * &p.a == int(5) * &p.b)
                .then(|| ne(int(20) * &p.a + int(63) * &p.d * &p.d))
        }),
    ]
}

fn c7_rules() -> Vec<Rule> {
    vec![
        ("c.71", "D != 0, C/D not in {1/3, 16/3}", |p| {
            ratio_outside(p, &[third(), sixteen_thirds()])
        }),
        ("c.72", "D != 0, C/D = 1/3, A != B", |p| {
            ratio_is(p, third()).then(|| ne(&p.a - &p.b))
        }),
        ("c.73", "D != 0, C/D = 16/3, 16A != 5B", |p| {
            ratio_is(p, sixteen_thirds()).then(|| ne(int(16) * &p.a - int(5) * &p.b))
        }),
        ("c.74", "D != 0, C/D = 16/3, 16A = 5B, 16A != -15D^2", |p| {
            (ratio_is(p, sixteen_thirds()) && int(16) * &p.a == int(5) * &p.b)
                .then(|| ne(int(16) * &p.a + int(15) * &p.d * &p.d))
        }),
        ("c.75", "D = 0, C = 0, A != 4B", |p| {
            both_zero(p).then(|| ne(&p.a - int(4) * &p.b))
        }),
    ]
}

fn c8_rules() -> Vec<Rule> {
    vec![
        ("c.81", "D != 0, C/D not in {1/3, 2, 16/3}", |p| {
            ratio_outside(p, &[third(), int(2), sixteen_thirds()])
        }),
        ("c.82", "D != 0, C/D = 1/3, A != B", |p| {
            ratio_is(p, third()).then(|| ne(&p.a - &p.b))
        }),
        ("c.83", "D != 0, C/D = 1/3, A = B, 8A != 5D^2", |p| {
            (ratio_is(p, third()) && p.a == p.b).then(|| ne(int(8) * &p.a - int(5) * &p.d * &p.d))
        }),
        ("c.84", "D != 0, C/D = 2, B != 4A", |p| {
            ratio_is(p, int(2)).then(|| ne(&p.b - int(4) * &p.a))
        }),
        ("c.85", "D != 0, C/D = 16/3, 16A != 5B", |p| {
            ratio_is(p, sixteen_thirds()).then(|| ne(int(16) * &p.a - int(5) * &p.b))
        }),
        ("c.86", "D != 0, C/D = 16/3, 16A = 5B, 16A != -15D^2", |p| {
            (ratio_is(p, sixteen_thirds()) && int(16) * &p.a == int(5) * &p.b)
                .then(|| ne(int(16) * &p.a + int(15) * &p.d * &p.d))
        }),
        ("c.87", "D = 0, C = 0, A != 0 and A != 3B", |p| {
            both_zero(p).then(|| {
                let w = &p.a - int(3) * &p.b;
                (!p.a.is_zero() && !w.is_zero()).then_some(&p.a * &w)
            })
        }),
    ]
}

fn c9_rules() -> Vec<Rule> {
    vec![
        ("c.91", "D != 0", |p| (!p.d.is_zero()).then(|| Some(p.d.clone()))),
        ("c.92", "D = 0, C = 0, A != 4B", |p| {
            both_zero(p).then(|| ne(&p.a - int(4) * &p.b))
        }),
    ]
}

fn c10_rules() -> Vec<Rule> {
    vec![
        ("c.101", "D != 0", |p| (!p.d.is_zero()).then(|| Some(p.d.clone()))),
        ("c.102", "D = 0, C = 0, 4A != B", |p| {
            both_zero(p).then(|| ne(int(4) * &p.a - &p.b))
        }),
    ]
}

fn single_d_rule(id: &'static str) -> Vec<Rule> {
    let rule: Rule = (id, "D != 0", |p| (!p.d.is_zero()).then(|| Some(p.d.clone())));
    vec![rule]
}

/// The full decision tree on explicit rational parameters.
pub fn theorem_evaluator(params: &HamiltonianParams) -> Result<Verdict> {
    let [a, b, c, d, e, f, g] = params.require_rationals()?;
    if d.is_zero() && f.is_zero() {
        return Ok(Verdict::separable());
    }
    let rp = resonance_parameter(params);
    let branching = branching_test(&rp);
    if branching.outcome == Outcome::NonIntegrable {
        return Ok(branching);
    }
    if let ResonanceParameter::Exact(_) = rp {
        let gate = denominator_gate(&rp);
        if gate.outcome == Outcome::NonIntegrable {
            return Ok(gate);
        }
    }
    let class = classify_quartic(&e, &f, &g);
    let p = P { a, b, c, d };
    let rules = match &class {
        QuarticClass::V0 => c0_rules(),
        QuarticClass::V1Z => single_d_rule("c.1"),
        QuarticClass::V1R => single_d_rule("c.2"),
        QuarticClass::V2 => c3_rules(),
        QuarticClass::V3 => c4_rules(),
        QuarticClass::V4 { .. } => single_d_rule("c.5"),
        QuarticClass::V5 { .. } => c7_rules(),
        QuarticClass::V5Mirror { .. } => c8_rules(),
        QuarticClass::V6 => c9_rules(),
        QuarticClass::V6Mirror => c10_rules(),
        QuarticClass::NoMatch => {
            return Ok(Verdict::inconclusive(OUTSIDE).with_note(format!("quartic part matches {class}")));
        }
    };
    let family = class.family().expect("matched class");
    let v = evaluate_rules(family, &rules, &p);
    Ok(if v.note.is_none() {
        v.with_note(class.to_string())
    } else {
        v
    })
}

/// Convenience for explicit inputs given as `[A, ..., G]`.
pub fn evaluate_rationals(values: [Rational; 7]) -> Result<Verdict> {
    theorem_evaluator(&HamiltonianParams::from_rationals(values, Some(Rational::one())))
}
