//! Frobenius solutions at `x = 0` for `x^2 y'' + x P(x) y' + Q(x) y = 0`.
//!
//! With `P = sum p_j x^j`, `Q = sum q_j x^j` one has
//! `L[x^s] = sum_j g_j(s) x^(s+j)` where `g_0(s) = s(s-1) + p_0 s + q_0`
//! and `g_j(s) = p_j s + q_j`. Differentiating in `s` gives
//! `L[x^s ln x] = ln x L[x^s] + sum_j g_j'(s) x^(s+j)`, which drives the
//! logarithmic case.

use std::fmt;

use num_traits::Zero;

use super::indicial::indicial_at_point;
use super::linear::LinearODE2;
use crate::algebra::rational::{fmt_rational, int};
use crate::algebra::{LogSeries, ParamScalar, PuiseuxSeries, Rational, Var};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusSolution {
    pub exponent: Rational,
    /// The solution divided by `x^exponent`.
    pub body: LogSeries,
    /// Coefficient that must vanish for a log-free solution; zero for the
    /// first solution and whenever no logarithm is forced.
    pub log_obstruction: ParamScalar,
}

impl FrobeniusSolution {
    /// `x^exponent * body`.
    pub fn solution(&self) -> LogSeries {
        LogSeries {
            s0: self.body.s0.mul_monomial(&self.exponent),
            s1: self.body.s1.mul_monomial(&self.exponent),
        }
    }

    pub fn has_log(&self) -> bool {
        self.body.has_log()
    }

    /// Coefficient of `x^(exponent + n)` in the log-free part.
    pub fn coeff(&self, n: usize) -> Result<ParamScalar> {
        self.body.s0.coeff_at(&int(n as i64))
    }
}

impl fmt::Display for FrobeniusSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}^({}) * [{}]",
            self.body.s0.var(),
            fmt_rational(&self.exponent),
            self.body
        )
    }
}

/// Local data `P = x c1`, `Q = x^2 c2` at the origin, expanded to
/// `terms` coefficients.
pub fn local_pq(ode: &LinearODE2, terms: usize) -> Result<(PuiseuxSeries, PuiseuxSeries)> {
    if ode.c1().pole_order_at_zero() > 1 || ode.c2().pole_order_at_zero() > 2 {
        return Err(Error::IrregularSingularity("at the origin".into()));
    }
    let p = ode.c1().mul_var_pow(1)?.laurent_at_zero(terms)?;
    let q = ode.c2().mul_var_pow(2)?.laurent_at_zero(terms)?;
    Ok((p, q))
}

/// Solutions at `x = 0` with coefficients through relative order `order`.
/// The first element has the larger exponent and never carries a log.
pub fn frobenius_solve(ode: &LinearODE2, order: usize) -> Result<(FrobeniusSolution, FrobeniusSolution)> {
    let ind = indicial_at_point(ode, &ParamScalar::zero())?;
    let (p, q) = local_pq(ode, order + 1)?;
    let (hi, lo) = ind
        .rational_roots()
        .ok_or_else(|| Error::NonRationalExponents(ind.to_string()))?;
    frobenius_with_exponents(ode.var(), &p, &q, hi, lo, order)
}

/// Same as [`frobenius_solve`] for coefficients given directly as series.
pub fn frobenius_from_pq(
    p: &PuiseuxSeries,
    q: &PuiseuxSeries,
    order: usize,
) -> Result<(FrobeniusSolution, FrobeniusSolution)> {
    let p0 = p.coeff_at(&Rational::zero())?;
    let q0 = q.coeff_at(&Rational::zero())?;
    let p1 = &p0 - &ParamScalar::one();
    let disc = &(&p1 * &p1) - &q0.scale(&int(4));
    let (d, b) = match (disc.as_rational(), p1.as_rational()) {
        (Some(d), Some(b)) => (d, b),
        _ => return Err(Error::NonRationalExponents(format!("discriminant {disc}"))),
    };
    let s = crate::algebra::rational::rational_sqrt(&d)
        .ok_or_else(|| Error::NonRationalExponents(format!("discriminant {}", fmt_rational(&d))))?;
    let half = crate::algebra::rational::rat(1, 2);
    let hi = (-&b + &s) * &half;
    let lo = (-&b - &s) * &half;
    frobenius_with_exponents(p.var(), p, q, hi, lo, order)
}

struct Recurrence {
    p: Vec<ParamScalar>,
    q: Vec<ParamScalar>,
}

impl Recurrence {
    fn new(p: &PuiseuxSeries, q: &PuiseuxSeries, n: usize) -> Result<Self> {
        for s in [p, q] {
            if let Some(e) = s.lead_exp() {
                if e < Rational::zero() {
                    return Err(Error::IrregularSingularity("at the origin".into()));
                }
                if !e.is_integer() || s.ram() != 1 {
                    return Err(Error::NotApplicable("ramified coefficients".into()));
                }
            }
        }
        Ok(Self {
            p: p.integer_coeffs(0, n)?,
            q: q.integer_coeffs(0, n)?,
        })
    }

    fn g(&self, j: usize, s: &Rational) -> ParamScalar {
        let mut v = &self.p[j].scale(s) + &self.q[j];
        if j == 0 {
            v += &ParamScalar::from_rational(s * (s - int(1)));
        }
        v
    }

    fn dg(&self, j: usize, s: &Rational) -> ParamScalar {
        if j == 0 {
            &self.p[0] + &ParamScalar::from_rational(int(2) * s - int(1))
        } else {
            self.p[j].clone()
        }
    }

    /// `sum_{j>=1} g_j(s0 + n - j) c_{n-j}`.
    fn tail(&self, coeffs: &[ParamScalar], s0: &Rational, n: usize) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for j in 1..=n {
            let c = &coeffs[n - j];
            if c.is_zero() {
                continue;
            }
            let g = self.g(j, &(s0 + int((n - j) as i64)));
            if !g.is_zero() {
                acc += &(&g * c);
            }
        }
        acc
    }

    /// `sum_{j>=0} g_j'(s1 + m - j) a_{m-j}` for `m = n - shift`.
    fn log_forcing(&self, a: &[ParamScalar], s1: &Rational, m: usize) -> ParamScalar {
        let mut acc = ParamScalar::zero();
        for j in 0..=m {
            let c = &a[m - j];
            if c.is_zero() {
                continue;
            }
            let g = self.dg(j, &(s1 + int((m - j) as i64)));
            if !g.is_zero() {
                acc += &(&g * c);
            }
        }
        acc
    }

    fn log_free(&self, s: &Rational, order: usize) -> Result<Vec<ParamScalar>> {
        let mut a = vec![ParamScalar::one()];
        for n in 1..=order {
            let g0 = self.g(0, &(s + int(n as i64)));
            if g0.is_zero() {
                return Err(Error::Domain(format!(
                    "resonance at index {n} for exponent {}",
                    fmt_rational(s)
                )));
            }
            let v = -&self.tail(&a, s, n);
            a.push(v.checked_div(&g0)?);
        }
        Ok(a)
    }
}

fn frobenius_with_exponents(
    var: Var,
    p: &PuiseuxSeries,
    q: &PuiseuxSeries,
    hi: Rational,
    lo: Rational,
    order: usize,
) -> Result<(FrobeniusSolution, FrobeniusSolution)> {
    let rec = Recurrence::new(p, q, order + 1)?;
    let series = |c: Vec<ParamScalar>| PuiseuxSeries::laurent(var, 0, c);
    let a = rec.log_free(&hi, order)?;
    let first = FrobeniusSolution {
        exponent: hi.clone(),
        body: LogSeries::plain(series(a.clone())),
        log_obstruction: ParamScalar::zero(),
    };
    let k = &hi - &lo;
    if !k.is_integer() {
        let b = rec.log_free(&lo, order)?;
        let second = FrobeniusSolution {
            exponent: lo,
            body: LogSeries::plain(series(b)),
            log_obstruction: ParamScalar::zero(),
        };
        return Ok((first, second));
    }
    let k = usize::try_from(k.to_integer()).expect("hi >= lo");
    let mut b: Vec<ParamScalar> = Vec::with_capacity(order + 1);
    let mut kappa = ParamScalar::zero();
    if k == 0 {
        kappa = ParamScalar::one();
        b.push(ParamScalar::zero());
    } else {
        b.push(ParamScalar::one());
    }
    for n in 1..=order {
        let mut rhs = -&rec.tail(&b, &lo, n);
        if n == k {
            // g_0(hi) = 0: the log coefficient absorbs the mismatch
            kappa = rhs.checked_div(&rec.dg(0, &hi))?;
            b.push(ParamScalar::zero());
            continue;
        }
        if n >= k && !kappa.is_zero() {
            rhs -= &(&kappa * &rec.log_forcing(&a, &hi, n - k));
        }
        let g0 = rec.g(0, &(&lo + int(n as i64)));
        b.push(rhs.checked_div(&g0)?);
    }
    let s1 = if kappa.is_zero() {
        PuiseuxSeries::zero_exact(var)
    } else {
        // kappa * y1 / x^lo = kappa x^k sum a_n x^n
        series(a.iter().map(|c| c * &kappa).collect()).mul_monomial(&int(k as i64))
    };
    let s0 = series(b);
    let s1 = if s1.is_zero() { s1 } else { s1.truncate(&int(order as i64 + 1))? };
    let second = FrobeniusSolution {
        exponent: lo,
        body: LogSeries { s0, s1 },
        log_obstruction: kappa,
    };
    Ok((first, second))
}

/// `x^2 y'' + x P y' + Q y` for a log series `y`.
pub fn euler_residual(p: &PuiseuxSeries, q: &PuiseuxSeries, y: &LogSeries) -> Result<LogSeries> {
    let var = p.var();
    let x1 = PuiseuxSeries::monomial(var, ParamScalar::one(), int(1));
    let x2 = PuiseuxSeries::monomial(var, ParamScalar::one(), int(2));
    let d1 = y.derivative()?;
    let d2 = d1.derivative()?;
    d2.mul_series(&x2)?
        .add(&d1.mul_series(&x1.mul(p)?)?)?
        .add(&y.mul_series(q)?)
}

/// True when the solution satisfies the equation through its precision.
pub fn verify_solution(ode: &LinearODE2, sol: &FrobeniusSolution, order: usize) -> Result<bool> {
    let (p, q) = local_pq(ode, order + 2)?;
    let r = euler_residual(&p, &q, &sol.solution())?;
    Ok(r.s0.is_zero() && r.s1.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use crate::algebra::{parse_scalar, RationalFunction, UniPoly};

    fn s(src: &str) -> ParamScalar {
        parse_scalar(src).unwrap()
    }

    #[test]
    fn euler_equation_with_double_root() {
        // x^2 y'' + x y' = 0: exponents {0, 0}, solutions 1 and ln x
        let c1 = RationalFunction::from_poly(UniPoly::one(Var::X)).mul_var_pow(-1).unwrap();
        let ode = LinearODE2::new(c1, RationalFunction::zero(Var::X)).unwrap();
        let (y1, y2) = frobenius_solve(&ode, 6).unwrap();
        assert_eq!(y1.exponent, int(0));
        assert!(y2.has_log());
        assert!(y2.log_obstruction.is_one());
        assert!(verify_solution(&ode, &y2, 6).unwrap());
    }

    #[test]
    fn bessel_order_zero_log() {
        // x^2 y'' + x y' + x^2 y = 0
        let c1 = RationalFunction::from_poly(UniPoly::one(Var::X)).mul_var_pow(-1).unwrap();
        let c2 = RationalFunction::from_poly(UniPoly::one(Var::X));
        let ode = LinearODE2::new(c1, c2).unwrap();
        let (y1, y2) = frobenius_solve(&ode, 8).unwrap();
        assert_eq!(y1.coeff(2).unwrap(), ParamScalar::from_rational(rat(-1, 4)));
        assert_eq!(y1.coeff(4).unwrap(), ParamScalar::from_rational(rat(1, 64)));
        assert!(verify_solution(&ode, &y1, 8).unwrap());
        assert!(verify_solution(&ode, &y2, 8).unwrap());
    }

    #[test]
    fn ordinary_point_has_no_log() {
        // y'' + A y = 0
        let c2 = RationalFunction::from_poly(UniPoly::constant(Var::X, s("A")));
        let ode = LinearODE2::new(RationalFunction::zero(Var::X), c2).unwrap();
        let (y1, y2) = frobenius_solve(&ode, 6).unwrap();
        assert_eq!((y1.exponent.clone(), y2.exponent.clone()), (int(1), int(0)));
        assert!(y2.log_obstruction.is_zero());
        assert_eq!(y2.coeff(2).unwrap(), s("-A/2"));
        assert!(verify_solution(&ode, &y2, 6).unwrap());
    }

    #[test]
    fn integer_gap_with_symbolic_log() {
        // x^2 y'' + (A x) y = 0 has exponents {1, 0}; the log coefficient is -A
        let c2 = RationalFunction::from_poly(UniPoly::constant(Var::X, s("A"))).mul_var_pow(-1).unwrap();
        let ode = LinearODE2::new(RationalFunction::zero(Var::X), c2).unwrap();
        let (_, y2) = frobenius_solve(&ode, 6).unwrap();
        assert_eq!(y2.log_obstruction, s("-A"));
        assert!(verify_solution(&ode, &y2, 6).unwrap());
    }
}
