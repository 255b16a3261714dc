use num_traits::Zero;

use super::params::HamiltonianParams;
use super::plane::build_time_ve;
use super::weierstrass::{plane_solution_series, CubicReduction};
use crate::algebra::rational::int;
use crate::algebra::{LogSeries, ParamScalar, PuiseuxSeries, UniPoly, Var};
use crate::error::{Error, Result};
use crate::ode::{frobenius_from_pq, FrobeniusSolution};

/// One 2x2 block `(y1, y2; y1', y2')` with unit Wronskian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionBlock {
    pub y1: PuiseuxSeries,
    pub y2: PuiseuxSeries,
    pub dy1: PuiseuxSeries,
    pub dy2: PuiseuxSeries,
    /// Wronskian before rescaling `y2`.
    pub raw_wronskian: ParamScalar,
}

impl SolutionBlock {
    /// The constant `y1 y2' - y2 y1'`; errors if it is not constant
    /// through truncation or vanishes.
    pub fn wronskian(y1: &PuiseuxSeries, y2: &PuiseuxSeries) -> Result<ParamScalar> {
        let w = y1.mul(&y2.derivative())?.sub(&y2.mul(&y1.derivative())?)?;
        for (e, c) in w.terms() {
            if !e.is_zero() && !c.is_zero() {
                return Err(Error::NonConstantWronskian(w.to_string()));
            }
        }
        let w0 = w.coeff_at(&int(0))?;
        if w0.is_zero() {
            return Err(Error::DependentSolutions);
        }
        Ok(w0)
    }

    pub fn new(y1: PuiseuxSeries, y2: PuiseuxSeries) -> Result<Self> {
        let w = Self::wronskian(&y1, &y2)?;
        let y2 = y2.scale(&w.inv()?);
        Ok(Self {
            dy1: y1.derivative(),
            dy2: y2.derivative(),
            y1,
            y2,
            raw_wronskian: w,
        })
    }

    /// The inverse block `(y2', -y2; -y1', y1)`.
    pub fn inverse(&self) -> [[PuiseuxSeries; 2]; 2] {
        [
            [self.dy2.clone(), self.y2.neg()],
            [self.dy1.neg(), self.y1.clone()],
        ]
    }

    fn matrix(&self) -> [[PuiseuxSeries; 2]; 2] {
        [
            [self.y1.clone(), self.y2.clone()],
            [self.dy1.clone(), self.dy2.clone()],
        ]
    }
}

/// Block-diagonal fundamental matrix of the two first variational
/// equations, each block normalized to unit Wronskian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalMatrix {
    pub blocks: [SolutionBlock; 2],
}

fn log_free(s: &LogSeries) -> Result<PuiseuxSeries> {
    if s.has_log() {
        return Err(Error::LogarithmicBasis);
    }
    Ok(s.s0.clone())
}

pub fn fundamental_matrix(
    sol11: (&LogSeries, &LogSeries),
    sol12: (&LogSeries, &LogSeries),
) -> Result<FundamentalMatrix> {
    Ok(FundamentalMatrix {
        blocks: [
            SolutionBlock::new(log_free(sol11.0)?, log_free(sol11.1)?)?,
            SolutionBlock::new(log_free(sol12.0)?, log_free(sol12.1)?)?,
        ],
    })
}

impl FundamentalMatrix {
    /// `X^-1 (0, f1, 0, f2)` for the first-order system in
    /// `(xi1, xi1', xi2, xi2')`: per block `(-y2 f, y1 f)`.
    pub fn inverse_apply(&self, f: [&PuiseuxSeries; 2]) -> Result<[PuiseuxSeries; 4]> {
        let [b1, b2] = &self.blocks;
        Ok([
            b1.y2.neg().mul(f[0])?,
            b1.y1.mul(f[0])?,
            b2.y2.neg().mul(f[1])?,
            b2.y1.mul(f[1])?,
        ])
    }

    /// `X X^-1 - I` for each block; every entry vanishes through truncation
    /// when the blocks are consistent.
    pub fn identity_defect(&self) -> Result<Vec<PuiseuxSeries>> {
        let mut out = Vec::new();
        for b in &self.blocks {
            let x = b.matrix();
            let xi = b.inverse();
            for i in 0..2 {
                for j in 0..2 {
                    let mut e = x[i][0].mul(&xi[0][j])?.add(&x[i][1].mul(&xi[1][j])?)?;
                    if i == j {
                        e = e.sub(&PuiseuxSeries::constant(e.var(), ParamScalar::one()))?;
                    }
                    out.push(e);
                }
            }
        }
        Ok(out)
    }
}

/// Solutions of the first variational equations in time at the pole of
/// the plane motion, for a cubic relation (`E = 0`, `C != 0`).
#[derive(Clone, Debug)]
pub struct TimeDomainBasis {
    pub reduction: CubicReduction,
    pub z0: PuiseuxSeries,
    /// `[(xi11^(1), xi11^(2)), (xi12^(1), xi12^(2))]`, leading coefficient 1.
    pub solutions: [(FrobeniusSolution, FrobeniusSolution); 2],
}

pub fn time_domain_basis(params: &HamiltonianParams, order: usize) -> Result<TimeDomainBasis> {
    let (reduction, z0) = plane_solution_series(params, order + 4)?;
    let ve = build_time_ve(params);
    let t2 = PuiseuxSeries::monomial(Var::T, ParamScalar::one(), int(2));
    let solve = |k: &UniPoly| -> Result<(FrobeniusSolution, FrobeniusSolution)> {
        // xi'' - k(z0) xi = 0, i.e. P = 0, Q = -t^2 k(z0)
        let kz = k.clone().with_var(Var::T).eval_series(&z0)?;
        let q = kz.mul(&t2)?.neg();
        let p = PuiseuxSeries::zero_exact(Var::T);
        frobenius_from_pq(&p, &q, order)
    };
    let s1 = solve(&ve.k1)?;
    let s2 = solve(&ve.k2)?;
    Ok(TimeDomainBasis {
        reduction,
        z0,
        solutions: [s1, s2],
    })
}

impl TimeDomainBasis {
    pub fn fundamental_matrix(&self) -> Result<FundamentalMatrix> {
        let [(a1, a2), (b1, b2)] = &self.solutions;
        fundamental_matrix(
            (&a1.solution(), &a2.solution()),
            (&b1.solution(), &b2.solution()),
        )
    }
}
