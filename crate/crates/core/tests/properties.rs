use nonintegrability::algebra::rational::{int, rat};
use nonintegrability::algebra::{ParamPolynomial, ParamScalar, PuiseuxSeries, Rational, Sym, Var};
use nonintegrability::obstructions::{
    denominator_gate, resonance_parameter, theorem_evaluator, ObstructionKind, Obstruction, Outcome,
};
use nonintegrability::ode::{frobenius_solve, verify_solution, LinearODE2};
use nonintegrability::report::{run_analysis, AnalysisRequest, Report, TestName};
use nonintegrability::variational::HamiltonianParams;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn seven() -> impl Strategy<Value = [Rational; 7]> {
    // zero is over-represented so separable and D = 0 branches get hit
    let coeff = prop_oneof![1 => Just(Rational::zero()), 3 => small_rational()];
    proptest::array::uniform7(coeff)
}

fn params(v: &[Rational; 7]) -> HamiltonianParams {
    HamiltonianParams::from_rationals(v.clone(), Some(int(1)))
}

/// `a A + b B + c` with `a != 0`.
fn linear_form() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (nonzero_rational(), small_rational(), small_rational())
}

fn linear(a: &Rational, b: &Rational, c: &Rational) -> ParamPolynomial {
    &(&ParamPolynomial::var(Sym::A).scale(a) + &ParamPolynomial::var(Sym::B).scale(b)) + &ParamPolynomial::constant(c.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gate_is_scale_invariant(e in nonzero_rational(), f in small_rational(), k in positive_rational()) {
        let base = HamiltonianParams::symbolic().with(Sym::E, e.clone()).with(Sym::F, f.clone());
        let scaled = HamiltonianParams::symbolic().with(Sym::E, &e * &k).with(Sym::F, &f * &k);
        let (p1, p2) = (resonance_parameter(&base), resonance_parameter(&scaled));
        prop_assert_eq!(&p1, &p2);
        prop_assert_eq!(denominator_gate(&p1), denominator_gate(&p2));
    }

    #[test]
    fn theorem_is_total_and_deterministic(v in seven()) {
        let first = theorem_evaluator(&params(&v));
        let second = theorem_evaluator(&params(&v));
        prop_assert!(first.is_ok());
        prop_assert_eq!(&first, &second);
        let separable = v[3].is_zero() && v[5].is_zero();
        prop_assert_eq!(first.unwrap().outcome == Outcome::Separable, separable);
    }

    #[test]
    fn locus_factors_multiply_back_and_vanish(
        forms in proptest::collection::vec(linear_form(), 1..4),
        mults in proptest::collection::vec(1u32..3, 3),
        k in nonzero_rational(),
        b0 in small_rational(),
    ) {
        let mut w = ParamPolynomial::constant(k);
        for (f, m) in forms.iter().zip(&mults) {
            w = &w * &linear(&f.0, &f.1, &f.2).pow(*m);
        }
        let o = Obstruction::new(ObstructionKind::Residue(2), "synthetic", ParamScalar::from_poly(w.clone()));
        let locus = o.locus.clone().expect("symbolic witness has a locus");
        prop_assert_eq!(locus.product(), w.clone());
        for (factor, _) in &locus.factors {
            // divisibility gives vanishing on the whole zero set
            prop_assert!(w.div_exact(factor).is_some());
            let cs = factor.coeffs_in(Sym::A);
            if cs.len() == 2 {
                // a point on the factor: A solved at a rational B
                let a = ParamScalar::new(-&cs[0], cs[1].clone()).unwrap();
                if let Ok(a) = a.eval(Sym::B, &b0) {
                    let at = o.value.eval(Sym::B, &b0).unwrap().substitute(Sym::A, &a).unwrap();
                    prop_assert!(at.is_zero());
                }
            }
        }
    }

    #[test]
    fn series_inverse_round_trips(
        start in -3i64..3,
        coeffs in proptest::collection::vec(small_rational(), 1..8),
        lead in nonzero_rational(),
    ) {
        let mut cs: Vec<ParamScalar> = vec![ParamScalar::from_rational(lead)];
        cs.extend(coeffs.into_iter().map(ParamScalar::from_rational));
        let s = PuiseuxSeries::laurent(Var::X, start, cs);
        let prod = s.mul(&s.inverse(None).unwrap()).unwrap();
        let defect = prod.sub(&PuiseuxSeries::constant(Var::X, ParamScalar::one())).unwrap();
        prop_assert!(defect.vanishes());
        let d = s.mul(&s).unwrap().derivative();
        let leibniz = s.derivative().mul(&s).unwrap().scale(&ParamScalar::from_int(2));
        prop_assert!(d.sub(&leibniz).unwrap().vanishes());
    }

    /// `x^2 y'' + x (1 - r1 - r2 + b x) y' + (r1 r2 + d x) y = 0` has
    /// exponents `r1, r2`; both Frobenius solutions must satisfy it,
    /// including the logarithmic cases.
    #[test]
    fn frobenius_solutions_satisfy_the_equation(
        r1 in (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d)),
        gap in prop_oneof![Just(0i64), Just(1), Just(2), Just(3)],
        b in small_rational(),
        d in small_rational(),
    ) {
        let r2 = &r1 - int(gap);
        let a = Rational::one() - &r1 - &r2;
        let c = &r1 * &r2;
        let sc = |r: &Rational| ParamScalar::from_rational(r.clone());
        let z = ParamScalar::zero();
        let ode = LinearODE2::from_coeffs(
            Var::X,
            (&[sc(&a), sc(&b)], &[z.clone(), ParamScalar::one()]),
            (&[sc(&c), sc(&d)], &[z.clone(), z, ParamScalar::one()]),
        ).unwrap();
        let (y1, y2) = frobenius_solve(&ode, 8).unwrap();
        prop_assert_eq!(&y1.exponent, &r1);
        prop_assert_eq!(&y2.exponent, &r2);
        prop_assert!(verify_solution(&ode, &y1, 8).unwrap());
        prop_assert!(verify_solution(&ode, &y2, 8).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reports_round_trip_and_repeat(v in seven()) {
        let strs: Vec<String> = v.iter().map(|r| r.to_string()).collect();
        let p: [&str; 7] = std::array::from_fn(|i| strs[i].as_str());
        let req = AnalysisRequest::new(p).with_tests(&[TestName::Branching, TestName::Gate, TestName::Theorem]);
        let a = run_analysis(&req).unwrap();
        let b = run_analysis(&req).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert_eq!(a.to_text(), b.to_text());
        prop_assert_eq!(Report::from_json(&a.to_json()).unwrap(), a);
    }
}
