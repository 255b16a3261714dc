//! One line per acceptance criterion, each with its own oracle.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nonintegrability::algebra::rational::{int, parse_rational, rat};
use nonintegrability::algebra::{parse_scalar, ParamScalar, Rational, Sym, Var};
use nonintegrability::obstructions::{
    commutator, denominator_gate, log_family, log_obstruction_test, residue_obstruction, theorem_evaluator,
    unipotent_family, Chart, Outcome, ResonanceParameter,
};
use nonintegrability::ode::{
    churchill_invariants, frobenius_solve, indicial_at_infinity, indicial_finite_simple_root, verify_solution,
    IndicialRoots, LinearODE2, Location, TraceValue,
};
use nonintegrability::report::{run_analysis, AnalysisRequest, TestName};
use nonintegrability::variational::{build_ve1_z, time_domain_basis, weierstrass_series, HamiltonianParams};
use num_traits::{One, Zero};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn s(e: &str) -> ParamScalar {
    parse_scalar(e).unwrap()
}

fn q(v: &str) -> Rational {
    parse_rational(v).unwrap()
}

/// `C = 1, D = 3` with no quartic part; `A`, `B`, `h` free.
fn unit_cubic() -> HamiltonianParams {
    HamiltonianParams::symbolic()
        .with(Sym::C, 1)
        .with(Sym::D, 3)
        .with(Sym::E, 0)
        .with(Sym::F, 0)
        .with(Sym::G, 0)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let (ve, _) = build_ve1_z(&HamiltonianParams::symbolic()).map_err(|e| e.to_string())?;
    let finite = indicial_finite_simple_root(&ve).map_err(|e| e.to_string())?;
    ensure(
        finite.roots == IndicialRoots::Rational { hi: rat(1, 2), lo: int(0) },
        format!("finite exponents {finite}"),
    )?;
    let (ve, _) = build_ve1_z(&HamiltonianParams::symbolic().with(Sym::E, 1).with(Sym::F, 2)).unwrap();
    let inf = indicial_at_infinity(&ve).map_err(|e| e.to_string())?;
    ensure(inf.roots == IndicialRoots::Rational { hi: int(2), lo: int(-1) }, format!("infinity {inf}"))?;
    // symbolic p: F = E (p^2 - 1)/4 gives roots (1 +- p)/2
    let sym_p = HamiltonianParams::symbolic().with(Sym::F, s("E*(p^2 - 1)/4"));
    let (ve, _) = build_ve1_z(&sym_p).unwrap();
    let inf = indicial_at_infinity(&ve).map_err(|e| e.to_string())?;
    let (sum, prod) = inf.sum_and_product();
    ensure(sum == s("1") && prod == s("(1 - p^2)/4"), format!("symbolic infinity {inf}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("finite {{1/2, 0}}, infinity {{2, -1}} at p = 3, in {elapsed:?}"))
}

fn criterion_2() -> Check {
    let sym_p = HamiltonianParams::symbolic().with(Sym::F, s("E*(p^2 - 1)/4"));
    let (ve, _) = build_ve1_z(&sym_p).unwrap();
    let inv = churchill_invariants(&ve).map_err(|e| e.to_string())?;
    let mut finite_points = 0;
    let mut saw_infinity = false;
    for (loc, c) in &inv {
        match loc {
            Location::SimpleRoots(poly) => {
                finite_points += poly.degree().unwrap_or(0);
                ensure(c.a == s("1/2") && c.b.is_zero(), format!("finite a, b = {}, {}", c.a, c.b))?;
                ensure(c.delta.squared() == s("1/4"), format!("finite Delta = {}", c.delta))?;
                ensure(c.trace == TraceValue::Zero, format!("finite t = {}", c.trace))?;
            }
            Location::Infinity => {
                saw_infinity = true;
                ensure(c.a == s("2"), format!("a_inf = {}", c.a))?;
                ensure(c.b == s("(1 - p^2)/4"), format!("b_inf = {}", c.b))?;
            }
            Location::Point(p) => return Err(format!("unexpected explicit singular point {p}")),
        }
    }
    ensure(finite_points == 4 && saw_infinity, "expected four finite points and infinity")?;
    Ok("(1/2, 0, 1/2, 0) at the four finite points, (2, (1-p^2)/4) at infinity".into())
}

fn criterion_3() -> Check {
    let gate = |p: &str| denominator_gate(&ResonanceParameter::Exact(q(p))).outcome;
    ensure(gate("1/4") == Outcome::NonIntegrable, "p = 1/4 should fire")?;
    for p in ["1", "2", "1/2", "5/3"] {
        ensure(gate(p) == Outcome::Inconclusive, format!("p = {p} should be inconclusive"))?;
    }
    Ok("p = 1/4 fires; 1, 2, 1/2, 5/3 inconclusive".into())
}

/// The normal equations at infinity for `C = 1, D = 3`, as printed.
fn printed_at_infinity(k: &str) -> LinearODE2 {
    let neg = format!("-({k})");
    LinearODE2::parse(
        Var::X,
        (&["1", "2*B", "0", "4*h"], &["0", "2", "2*B", "0", "2*h"]),
        (&["-3", &neg], &["0", "0", "1", "B", "0", "h"]),
    )
    .unwrap()
}

fn criterion_4() -> Check {
    let expected = [
        ("A", ["-2/5*A + 9/10*B", "2/15*A^2 - 1/3*A*B + 3/40*B^2"], ["2/9*A - 8/9*B", "2/99*A^2 - 26/99*A*B + 8/11*B^2"]),
        ("B", ["1/2*B", "-1/8*B^2"], ["-2/3*B", "16/33*B^2"]),
    ];
    for (k, low, high) in expected {
        let ode = printed_at_infinity(k);
        let (hi, lo) = frobenius_solve(&ode, 12).map_err(|e| e.to_string())?;
        ensure(hi.exponent == int(2) && lo.exponent == rat(-3, 2), format!("exponents {} {}", hi.exponent, lo.exponent))?;
        for (sol, want) in [(&lo, low), (&hi, high)] {
            for (n, w) in want.iter().enumerate() {
                let got = sol.coeff(n + 1).map_err(|e| e.to_string())?;
                ensure(got == s(w), format!("k = {k}, x^({}) coefficient {}: {got} vs {w}", sol.exponent, n + 1))?;
            }
            // the back-substitution oracle
            ensure(verify_solution(&ode, sol, 12).map_err(|e| e.to_string())?, "residual nonzero below order 12")?;
        }
    }
    Ok("exponents {2, -3/2}, printed coefficients exact; second-order B terms resolve to 3/40 B^2 and 8/11 B^2".into())
}

/// The printed normal equation at infinity for `C/D = 16/3`.
fn printed_log_equation() -> LinearODE2 {
    LinearODE2::parse(
        Var::X,
        (&["8", "0", "0", "2*h"], &["0", "16", "B", "0", "h"]),
        (&["-3", "-A"], &["0", "0", "16", "B", "0", "h"]),
    )
    .unwrap()
}

fn criterion_5() -> Check {
    let ode = printed_log_equation();
    let t = log_obstruction_test(&ode, 8).map_err(|e| e.to_string())?;
    ensure(t.exponents == (rat(3, 4), rat(-1, 4)), format!("exponents {:?}", t.exponents))?;
    let locus = t.obstruction.locus.clone().ok_or("no locus")?;
    ensure(locus.factors.len() == 1, format!("locus {locus}"))?;
    let line = s("16*A - 5*B");
    let ratio = ParamScalar::new(locus.factors[0].0.clone(), line.numer().clone()).map_err(|e| e.to_string())?;
    ensure(ratio.as_rational().is_some(), format!("locus {locus} is not the line 16A - 5B"))?;
    let on = ode.substitute_param(Sym::A, &s("5*B/16")).map_err(|e| e.to_string())?;
    let t_on = log_obstruction_test(&on, 8).map_err(|e| e.to_string())?;
    ensure(t_on.obstruction.value.is_zero(), format!("on the line: {}", t_on.obstruction.value))?;
    Ok(format!("exponents {{3/4, -1/4}}, ln coefficient {} vanishes exactly on {locus}", t.obstruction.value))
}

fn printed_level2(a: &Rational, b: &Rational) -> Rational {
    rat(32, 225) * (a - b) * b * (a * a - rat(17, 8) * a * b - rat(9, 512) * b * b)
}

/// Exact Gaussian elimination; `None` for a singular system.
fn solve(mut m: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        rhs.swap(col, piv);
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = &m[r][col] / &m[col][col];
                for c in col..n {
                    let d = &f * &m[col][c];
                    m[r][c] -= d;
                }
                let d = &f * &rhs[col];
                rhs[r] -= d;
            }
        }
    }
    Some((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
}

fn criterion_6() -> Check {
    let order = 8;
    let base = unit_cubic().with(Sym::H, 1);
    let symbolic = residue_obstruction(&base, 2, Chart::SqrtWeight, order).map_err(|e| e.to_string())?;
    for e in &symbolic.entries {
        let v = &e.residue;
        ensure(v.eval(Sym::A, &int(1)).and_then(|x| x.eval(Sym::B, &int(1))).unwrap().is_zero(), format!("{} at A = B", e.label))?;
        ensure(v.substitute(Sym::A, &ParamScalar::sym(Sym::B)).unwrap().is_zero(), format!("{} nonzero on A = B", e.label))?;
        ensure(v.eval(Sym::B, &int(0)).unwrap().is_zero(), format!("{} nonzero on B = 0", e.label))?;
    }
    // degree-4 monomials in A, B
    let monos: Vec<(i32, i32)> = (0..=4).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let points: Vec<(Rational, Rational)> =
        (0..25).map(|k| (rat(k % 5 - 2, 1 + k / 5), rat(2 * (k / 5) - 3, 1 + k % 3))).collect();
    let mut samples: Vec<Vec<Rational>> = vec![vec![]; symbolic.entries.len()];
    for (a, b) in &points {
        let p = base.clone().with(Sym::A, a.clone()).with(Sym::B, b.clone());
        let r = residue_obstruction(&p, 2, Chart::SqrtWeight, order).map_err(|e| e.to_string())?;
        ensure(r.entries.len() == symbolic.entries.len(), "entry count differs at a sample point")?;
        for (i, e) in r.entries.iter().enumerate() {
            ensure(e.label == symbolic.entries[i].label, "entry order differs at a sample point")?;
            samples[i].push(e.residue.as_rational().ok_or("non-rational sample")?);
        }
    }
    let row = |a: &Rational, b: &Rational| -> Vec<Rational> {
        monos.iter().map(|&(i, j)| num_traits::pow(a.clone(), i as usize) * num_traits::pow(b.clone(), j as usize)).collect()
    };
    // first 15 points fix the fit, the remaining 10 check it
    let basis: Vec<Vec<Rational>> = points.iter().take(monos.len()).map(|(a, b)| row(a, b)).collect();
    for (i, vals) in samples.iter().enumerate() {
        let coeffs = solve(basis.clone(), vals[..monos.len()].to_vec()).ok_or("singular sample set")?;
        let mut fitted = ParamScalar::zero();
        for (c, &(a, b)) in coeffs.iter().zip(&monos) {
            let m = &ParamScalar::sym(Sym::A).pow(a).unwrap() * &ParamScalar::sym(Sym::B).pow(b).unwrap();
            fitted = &fitted + &m.scale(c);
        }
        for ((a, b), v) in points.iter().zip(vals) {
            let at = fitted.eval(Sym::A, a).unwrap().eval(Sym::B, b).unwrap();
            ensure(at.as_rational().as_ref() == Some(v), "degree-4 fit misses a sample")?;
        }
        ensure(fitted == symbolic.entries[i].residue, format!("fit {fitted} vs symbolic {}", symbolic.entries[i].residue))?;
    }
    // proportionality to the printed polynomial across the samples
    let printed: Vec<Rational> = points.iter().map(|(a, b)| printed_level2(a, b)).collect();
    let proportional = samples.iter().any(|vals| {
        let k = vals.iter().zip(&printed).find(|(_, p)| !p.is_zero()).map(|(v, p)| v / p);
        k.is_some_and(|k| !k.is_zero() && vals.iter().zip(&printed).all(|(v, p)| *v == &k * p))
    });
    let report = run_analysis(&AnalysisRequest::new(["2", "1", "1", "3", "0", "0", "0"]).with_tests(&[TestName::Residue2]))
        .map_err(|e| e.to_string())?;
    let flagged = report.paper_discrepancies.iter().any(|d| d.topic.starts_with("level-2 residue"));
    ensure(proportional || flagged, "mismatch with the printed polynomial not reported")?;
    let nonzero = symbolic.nonzero().count();
    Ok(format!(
        "{} entries, {nonzero} nonzero; fit over 25 points matches; proportional to printed: {proportional}; discrepancy reported: {flagged}",
        symbolic.entries.len()
    ))
}

/// `wp = sum c_n t^(2n-2)` from `wp'' = 6 wp^2 - g2/2`, seeded with
/// `c_2 = g2/20`, `c_3 = g3/28`.
fn wp_oracle(g2: &Rational, g3: &Rational, terms: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); terms.max(4)];
    c[0] = Rational::one();
    c[2] = g2 / int(20);
    c[3] = g3 / int(28);
    for n in 4..terms {
        let conv: Rational = (1..n).map(|i| &c[i] * &c[n - i]).sum();
        let lhs = int((2 * n as i64 - 2) * (2 * n as i64 - 3) - 12);
        c[n] = int(6) * conv / lhs;
    }
    c
}

/// `xi = t^rho sum a_k t^k` for `xi'' = (12 wp - 2 s) xi` with `wp` given by
/// `wp_oracle` coefficients; the resonant slot is set to zero.
fn xi_oracle(rho: i64, shift: &Rational, wp: &[Rational], terms: usize) -> Vec<Rational> {
    // coefficients of wp in powers t^(j-2)
    let mut w = vec![Rational::zero(); terms + 1];
    for (n, cn) in wp.iter().enumerate() {
        if 2 * n < w.len() {
            w[2 * n] = cn.clone();
        }
    }
    let mut a = vec![Rational::zero(); terms];
    a[0] = Rational::one();
    for k in 1..terms {
        let mut rhs: Rational = (1..=k).map(|j| int(12) * &w[j] * &a[k - j]).sum();
        if k >= 2 {
            rhs -= int(2) * shift * &a[k - 2];
        }
        let m = (rho + k as i64) * (rho + k as i64 - 1) - 12;
        a[k] = if m == 0 { Rational::zero() } else { rhs / int(m) };
    }
    a
}

fn criterion_7() -> Check {
    let b0 = unit_cubic().with(Sym::B, 0);
    let basis = time_domain_basis(&b0, 8).map_err(|e| e.to_string())?;
    let [(a1, a2), (b1, b2)] = &basis.solutions;
    ensure(a1.exponent == int(4) && a2.exponent == int(-3), "leading exponents of xi11")?;
    ensure(b1.exponent == int(4) && b2.exponent == int(-3), "leading exponents of xi12")?;
    ensure(a1.coeff(2).unwrap() == s("-A/9") && a2.coeff(2).unwrap() == s("A/5"), "A/9, A/5 terms")?;
    ensure(b1.coeff(6).unwrap() == s("h/364") && b2.coeff(6).unwrap() == s("-h/28"), "h/364, h/28 terms")?;
    // independent recurrence at A = 2, h = 7, where g3 = h/2
    let (a, h) = (int(2), int(7));
    let wp = wp_oracle(&int(0), &(&h / int(2)), 8);
    // z = -2 wp, so xi11'' = (12 wp - 2A) xi11 and xi12'' = 12 wp xi12
    let pairs = [(a1, &a, 4), (a2, &a, -3), (b1, &Rational::zero(), 4), (b2, &Rational::zero(), -3)];
    for (sol, shift, rho) in pairs {
        let oracle = xi_oracle(rho, shift, &wp, 7);
        for (k, want) in oracle.iter().enumerate() {
            let got = sol.coeff(k).unwrap().eval(Sym::A, &a).unwrap().eval(Sym::H, &h).unwrap();
            ensure(got.as_rational().as_ref() == Some(want), format!("t^({rho}+{k}): {got} vs {want}"))?;
        }
    }
    let l2 = residue_obstruction(&b0, 2, Chart::TimeDomain, 12).map_err(|e| e.to_string())?;
    ensure(l2.nonzero().count() == 0, "a level-2 residue is nonzero")?;
    let l3 = residue_obstruction(&b0, 3, Chart::TimeDomain, 12).map_err(|e| e.to_string())?;
    let entry = l3
        .entries
        .iter()
        .find(|e| e.label == "xi1 = (xi11^(2), 0): y1(1) * K3(1)")
        .ok_or("designated level-3 entry missing")?;
    let per_a = entry.residue.checked_div(&ParamScalar::sym(Sym::A)).map_err(|e| e.to_string())?;
    let c = per_a.as_rational().ok_or(format!("residue {} is not a multiple of A", entry.residue))?;
    ensure(!c.is_zero(), "residue is zero")?;
    ensure(entry.residue.eval(Sym::A, &int(0)).unwrap().is_zero(), "nonzero at A = 0")?;
    Ok(format!(
        "series match the recurrence (signs: +h/364, -h/28); level 2 all zero; level 3 residue {}",
        entry.residue
    ))
}

fn criterion_8() -> Check {
    let n = 20;
    let g2 = ParamScalar::sym(Sym::G2);
    let g3 = ParamScalar::sym(Sym::G3);
    // the defect is known four orders below the series itself
    let wp = weierstrass_series(&g2, &g3, n + 4).map_err(|e| e.to_string())?;
    let defect = wp.identity_defect().map_err(|e| e.to_string())?;
    let known = defect.trunc_order().ok_or("defect has no order")?;
    ensure(known >= int(n as i64), format!("defect known only below t^{known}"))?;
    ensure(defect.vanishes(), format!("defect {defect}"))?;
    // coefficients against the second-order recurrence at g2 = 3, g3 = -5/2
    let oracle = wp_oracle(&int(3), &rat(-5, 2), (n + 2) / 2);
    for (k, want) in oracle.iter().enumerate() {
        let got = wp.series.coeff_at(&int(2 * k as i64 - 2)).unwrap();
        let got = got.eval(Sym::G2, &int(3)).unwrap().eval(Sym::G3, &rat(-5, 2)).unwrap();
        ensure(got.as_rational().as_ref() == Some(want), format!("t^{} coefficient", 2 * k as i64 - 2))?;
    }
    Ok(format!("(wp')^2 - 4wp^3 + g2 wp + g3 = O(t^{known}) with g2, g3 symbolic"))
}

fn criterion_9() -> Check {
    let t = log_obstruction_test(&printed_log_equation(), 8).map_err(|e| e.to_string())?;
    let kappa = t.obstruction.value.clone();
    let c = commutator(&log_family(&kappa, true), &unipotent_family());
    ensure(c[0][0].is_zero() && c[0][1].is_zero() && c[1][1].is_zero(), "commutator outside the (1,0) slot")?;
    ensure(!c[1][0].is_zero(), "commutator vanishes for generic A, B")?;
    // the entry must be kappa times a kappa-free factor
    let rest = c[1][0].checked_div(&kappa).map_err(|e| e.to_string())?;
    ensure(!rest.contains(Sym::A) && !rest.contains(Sym::B), format!("commutator / kappa = {rest}"))?;
    let on = c[1][0].substitute(Sym::A, &s("5*B/16")).map_err(|e| e.to_string())?;
    ensure(on.is_zero(), "commutator survives on 16A = 5B")?;
    let trivial = commutator(&log_family(&ParamScalar::zero(), true), &unipotent_family());
    ensure(trivial.iter().flatten().all(ParamScalar::is_zero), "log-free family fails to commute")?;
    Ok(format!("[(1,0) entry] = {} = ({rest}) * ln coefficient", c[1][0]))
}

/// A fixed spread of 200 rational points over all seven coefficients.
fn grid() -> Vec<[Rational; 7]> {
    let vals = ["0", "1", "-1", "2", "1/3", "3", "16/3", "-5/2", "12", "16", "6", "8", "1/2"].map(q);
    (0..200u64)
        .map(|i| {
            let mut x = i.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            std::array::from_fn(|_| {
                x ^= x >> 29;
                x = x.wrapping_mul(0xbf58476d1ce4e5b9);
                vals[(x >> 33) as usize % vals.len()].clone()
            })
        })
        .collect()
}

fn verdict(p: &[&str; 7]) -> nonintegrability::obstructions::Verdict {
    theorem_evaluator(&HamiltonianParams::parse(p, Some("1")).unwrap()).unwrap()
}

fn criterion_10() -> Check {
    let pts = grid();
    ensure(pts.len() == 200, "grid size")?;
    let mut counts = std::collections::BTreeMap::new();
    for p in &pts {
        let params = HamiltonianParams::from_rationals(p.clone(), Some(int(1)));
        let v = catch_unwind(|| theorem_evaluator(&params))
            .map_err(|_| format!("panic at {p:?}"))?
            .map_err(|e| format!("error at {p:?}: {e}"))?;
        let separable = p[3].is_zero() && p[5].is_zero();
        ensure((v.outcome == Outcome::Separable) == separable, format!("separable flag wrong at {p:?}"))?;
        *counts.entry(v.outcome.to_string()).or_insert(0) += 1;
    }
    let fixtures: [(&[&str; 7], Outcome, &str); 15] = [
        (&["1", "2", "1", "3", "0", "0", "0"], Outcome::NonIntegrable, "c.02"),
        (&["1", "2", "16", "3", "0", "0", "0"], Outcome::NonIntegrable, "c.03"),
        (&["5", "16", "16", "3", "0", "0", "0"], Outcome::Inconclusive, "c.0"),
        (&["1", "2", "1", "1", "1", "2", "1"], Outcome::NonIntegrable, "c.31"),
        (&["0", "0", "1", "3", "1", "2", "1"], Outcome::Inconclusive, "c.3"),
        (&["1", "1", "1", "3", "1", "6", "1"], Outcome::Inconclusive, "c.4"),
        (&["1", "1", "1", "1", "1", "12", "16"], Outcome::NonIntegrable, "c.71"),
        (&["1", "1", "0", "0", "1", "12", "16"], Outcome::NonIntegrable, "c.75"),
        (&["1", "1", "1", "3", "1", "12", "16"], Outcome::Inconclusive, "c.7"),
        (&["1", "1", "1", "1", "16", "12", "1"], Outcome::NonIntegrable, "c.81"),
        (&["10", "10", "4/3", "4", "16", "12", "1"], Outcome::Inconclusive, "c.8"),
        (&["1", "2", "1", "1", "1", "6", "8"], Outcome::NonIntegrable, "c.91"),
        (&["4", "1", "0", "0", "1", "6", "8"], Outcome::Inconclusive, "c.9"),
        (&["1", "4", "0", "0", "8", "6", "1"], Outcome::Inconclusive, "c.10"),
        (&["1", "1", "1", "0", "1", "0", "1"], Outcome::Separable, "separable"),
    ];
    for (p, outcome, case) in fixtures {
        let v = verdict(p);
        ensure(v.outcome == outcome && v.case_id == case, format!("{p:?}: got {v}, want {outcome}({case})"))?;
    }
    Ok(format!("200 points, no panic: {counts:?}; 15 fixtures"))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("indicial data", criterion_1),
        ("Churchill invariants", criterion_2),
        ("denominator gate", criterion_3),
        ("Frobenius at infinity", criterion_4),
        ("log obstruction", criterion_5),
        ("level-2 residues", criterion_6),
        ("B = 0 third variation", criterion_7),
        ("Weierstrass identity", criterion_8),
        ("Galois commutator", criterion_9),
        ("theorem totality", criterion_10),
    ];
    let mut failed = vec![];
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
