use std::fmt;

use super::verdict::{Obstruction, ObstructionKind};
use crate::algebra::rational::{fmt_rational, to_i64};
use crate::algebra::{ParamScalar, Rational, Sym};
use crate::error::{Error, Result};
use crate::ode::{frobenius_solve, indicial_at_point, FrobeniusSolution, LinearODE2};

/// Outcome of the logarithm test at the origin of an equation.
#[derive(Clone, Debug)]
pub struct LogTest {
    pub exponents: (Rational, Rational),
    pub solutions: (FrobeniusSolution, FrobeniusSolution),
    pub obstruction: Obstruction,
    pub galois: GaloisFamily,
}

/// Runs the Frobenius method at `x = 0` and reports the coefficient of the
/// forced logarithm. The point must have an integer exponent difference.
pub fn log_obstruction_test(ode: &LinearODE2, order: usize) -> Result<LogTest> {
    let ind = indicial_at_point(ode, &ParamScalar::zero())?;
    let (hi, lo) = ind
        .rational_roots()
        .ok_or_else(|| Error::NonRationalExponents(ind.to_string()))?;
    let diff = &hi - &lo;
    if !diff.is_integer() {
        return Err(Error::NotApplicable(format!(
            "exponent difference {} is not an integer",
            fmt_rational(&diff)
        )));
    }
    let k = to_i64(&diff).unwrap_or(0).max(0) as usize;
    let sols = frobenius_solve(ode, order.max(k + 2))?;
    let kappa = sols.1.log_obstruction.clone();
    let obstruction = Obstruction::new(
        ObstructionKind::Logarithm,
        format!("ln coefficient at exponents {{{}, {}}}", fmt_rational(&hi), fmt_rational(&lo)),
        kappa,
    );
    let galois = galois_local_classify(&sols);
    Ok(LogTest {
        exponents: (hi, lo),
        solutions: sols,
        obstruction,
        galois,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisClass {
    /// No logarithm and exponents distinct modulo the integers, or an
    /// integer difference without a log.
    Diagonalizable,
    /// Log-free with one integer exponent and the other not; the finite
    /// points of the plane equations.
    Unipotent,
    /// Logarithm with integer exponents.
    UnipotentLog,
    /// Logarithm with non-integer exponents.
    LowerTriangularFamily,
}

pub type Matrix2 = [[ParamScalar; 2]; 2];

/// A local differential Galois family with its symbolic representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisFamily {
    pub class: GaloisClass,
    pub matrix: Matrix2,
}

impl fmt::Display for GaloisFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.matrix;
        write!(f, "{:?} {{({}, {}; {}, {})}}", self.class, m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

fn sym(s: Sym) -> ParamScalar {
    ParamScalar::sym(s)
}

/// `(1/delta) (1, 0; kappa gamma, 1 + kappa (delta - 1))`, the action of
/// `ln x -> delta ln x + gamma` on `(y1, y2 = kappa y1 ln x + ...)`,
/// rescaled by the exponential torus. At `kappa = 1` this is
/// `(1/delta, 0; gamma/delta, 1)`.
pub fn log_family(kappa: &ParamScalar, with_torus: bool) -> Matrix2 {
    let d = sym(Sym::Delta);
    let g = sym(Sym::Gamma);
    let one = ParamScalar::one();
    let m = [
        [one.clone(), ParamScalar::zero()],
        [kappa * &g, &one + &(kappa * &(&d - &one))],
    ];
    if !with_torus {
        return m;
    }
    let inv = d.inv().expect("delta is a nonzero symbol");
    m.map(|row| row.map(|e| &e * &inv))
}

/// `(1, 0; mu, 1)`.
pub fn unipotent_family() -> Matrix2 {
    [
        [ParamScalar::one(), ParamScalar::zero()],
        [sym(Sym::Mu), ParamScalar::one()],
    ]
}

pub fn galois_local_classify(sol: &(FrobeniusSolution, FrobeniusSolution)) -> GaloisFamily {
    let (a, b) = sol;
    let integral = a.exponent.is_integer() && b.exponent.is_integer();
    let diff_integral = (&a.exponent - &b.exponent).is_integer();
    if b.has_log() || !b.log_obstruction.is_zero() {
        let kappa = ParamScalar::one();
        return if integral {
            GaloisFamily {
                class: GaloisClass::UnipotentLog,
                matrix: log_family(&kappa, false),
            }
        } else {
            GaloisFamily {
                class: GaloisClass::LowerTriangularFamily,
                matrix: log_family(&kappa, true),
            }
        };
    }
    if !diff_integral && (a.exponent.is_integer() || b.exponent.is_integer()) {
        return GaloisFamily {
            class: GaloisClass::Unipotent,
            matrix: unipotent_family(),
        };
    }
    let matrix = if diff_integral {
        // a scalar torus element
        let inv = sym(Sym::Delta).inv().expect("nonzero symbol");
        [[inv.clone(), ParamScalar::zero()], [ParamScalar::zero(), inv]]
    } else {
        [[sym(Sym::Delta), ParamScalar::zero()], [ParamScalar::zero(), sym(Sym::Gamma)]]
    };
    GaloisFamily {
        class: GaloisClass::Diagonalizable,
        matrix,
    }
}

pub fn mat_mul(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `AB - BA`.
pub fn commutator(a: &Matrix2, b: &Matrix2) -> Matrix2 {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    let e = |i: usize, j: usize| &ab[i][j] - &ba[i][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn is_zero_matrix(m: &Matrix2) -> bool {
    m.iter().flatten().all(ParamScalar::is_zero)
}

/// Whether two symbolic families commute identically in their parameters.
pub fn families_commute(a: &GaloisFamily, b: &GaloisFamily) -> bool {
    is_zero_matrix(&commutator(&a.matrix, &b.matrix))
}
