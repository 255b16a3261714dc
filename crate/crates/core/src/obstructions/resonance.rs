use std::fmt;

use num_traits::One;

use super::verdict::{Obstruction, ObstructionKind, Verdict};
use crate::algebra::rational::{denominator, fmt_rational, rational_sqrt};
use crate::algebra::{ParamScalar, Rational};
use crate::ode::{Delta, TraceValue};
use crate::variational::HamiltonianParams;

/// `p = sqrt(1 + 4F/E)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResonanceParameter {
    Exact(Rational),
    IrrationalSquare(Rational),
    /// `E = 0`.
    Undefined,
    /// `E` or `F` still symbolic; the radicand is kept.
    Symbolic(ParamScalar),
}

impl fmt::Display for ResonanceParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResonanceParameter::Exact(p) => write!(f, "p = {}", fmt_rational(p)),
            ResonanceParameter::IrrationalSquare(r) => write!(f, "p = sqrt({})", fmt_rational(r)),
            ResonanceParameter::Undefined => f.write_str("p undefined (E = 0)"),
            ResonanceParameter::Symbolic(r) => write!(f, "p = sqrt({r})"),
        }
    }
}

pub fn resonance_parameter(params: &HamiltonianParams) -> ResonanceParameter {
    if params.e.is_zero() {
        return ResonanceParameter::Undefined;
    }
    let four_f = params.f.scale(&Rational::from_integer(4.into()));
    let radicand = match four_f.checked_div(&params.e) {
        Ok(r) => &ParamScalar::one() + &r,
        Err(_) => return ResonanceParameter::Undefined,
    };
    match radicand.as_rational() {
        Some(r) => from_radicand(&r),
        None => ResonanceParameter::Symbolic(radicand),
    }
}

/// Classifies `sqrt(r)`; negative radicands are irrational squares too.
pub fn from_radicand(r: &Rational) -> ResonanceParameter {
    match rational_sqrt(r) {
        Some(p) => ResonanceParameter::Exact(p),
        None => ResonanceParameter::IrrationalSquare(r.clone()),
    }
}

/// Positive denominator of `p` in lowest terms.
pub fn resonance_denominator(p: &Rational) -> Rational {
    Rational::from_integer(denominator(p))
}

/// Case (a): an irrational `p` rules out an extra holomorphic integral.
pub fn branching_test(rp: &ResonanceParameter) -> Verdict {
    match rp {
        ResonanceParameter::IrrationalSquare(r) => Verdict::non_integrable(
            "a",
            vec![Obstruction::new(
                ObstructionKind::Branching,
                "1 + 4F/E is not a rational square",
                ParamScalar::from_rational(r.clone()),
            )],
        ),
        ResonanceParameter::Exact(_) => Verdict::inconclusive("a"),
        ResonanceParameter::Undefined => Verdict::skipped("a", "p undefined for E = 0"),
        ResonanceParameter::Symbolic(_) => Verdict::skipped("a", "E, F not explicit"),
    }
}

/// Case (b): for `N(p) >= 4` the trace at infinity `2cos(pi p)` is
/// transcendental over the finite-point traces, which are all rational.
pub fn denominator_gate(rp: &ResonanceParameter) -> Verdict {
    let ResonanceParameter::Exact(p) = rp else {
        return Verdict::skipped("b", "needs a rational p");
    };
    let n = denominator(p);
    if n < 4.into() {
        return Verdict::inconclusive("b").with_note(format!("N(p) = {n}"));
    }
    let trace = TraceValue::from_delta(&Delta::Exact(ParamScalar::from_rational(p.clone())));
    let label = match &trace {
        TraceValue::TwoCosPi(arg) => format!("t_inf = 2cos(pi*{arg}), N(p) = {n}"),
        other => format!("t_inf = {other:?}, N(p) = {n}"),
    };
    // witness: p itself, whose denominator exceeds 3
    Verdict::non_integrable(
        "b",
        vec![Obstruction::new(
            ObstructionKind::TraceTranscendence,
            label,
            ParamScalar::from_rational(p.clone()),
        )],
    )
}

/// `F = E (p^2 - 1)/4`, the inverse of `resonance_parameter`.
pub fn f_for_resonance(e: &Rational, p: &Rational) -> Rational {
    e * (p * p - Rational::one()) / Rational::from_integer(4.into())
}
