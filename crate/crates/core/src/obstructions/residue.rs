//! Residues of the variation-of-constants integrands for the second and
//! third variational equations.
//!
//! At level `L` the particular solution of `xi_L'' = J xi_L + K_L` needs
//! `int X^-1 (0, K_L)`; a nonzero residue in any entry produces a
//! logarithm and obstructs integrability.

use std::collections::BTreeMap;
use std::fmt;


use super::verdict::{Obstruction, ObstructionKind};
use crate::algebra::rational::int;
use crate::algebra::{series_sqrt_inverse, LogSeries, ParamScalar, PuiseuxSeries, Var};
use crate::error::{Error, Result};
use crate::ode::frobenius_solve;
use crate::variational::{
    build_ve1_x, hvar_rhs, time_domain_basis, weight_radicand, Form, FundamentalMatrix, HamiltonianParams,
    HigherVariationRHS, Xi,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    /// `x = 1/z` with the weight `(2 x^4 q(1/x))^(-1/2)`.
    SqrtWeight,
    /// Laurent series in time at the pole of the plane solution.
    TimeDomain,
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Chart::SqrtWeight => "x-chart with sqrt weight",
            Chart::TimeDomain => "time domain",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueEntry {
    pub level: u8,
    pub label: String,
    pub residue: ParamScalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueReport {
    pub level: u8,
    pub chart: Chart,
    pub entries: Vec<ResidueEntry>,
    /// Relative order of the basis expansions that succeeded.
    pub order: usize,
    pub retries: usize,
}

impl ResidueReport {
    pub fn nonzero(&self) -> impl Iterator<Item = &ResidueEntry> {
        self.entries.iter().filter(|e| !e.residue.is_zero())
    }

    /// Residues at the requested level only.
    pub fn at_level(&self, level: u8) -> impl Iterator<Item = &ResidueEntry> {
        self.entries.iter().filter(move |e| e.level == level)
    }

    /// The first nonzero residue as an obstruction, or a zero witness.
    pub fn witness(&self) -> Obstruction {
        let kind = ObstructionKind::Residue(self.level);
        match self.nonzero().next() {
            Some(e) => Obstruction::new(ObstructionKind::Residue(e.level), e.label.clone(), e.residue.clone()),
            None => Obstruction::new(kind, format!("all {} residues", self.entries.len()), ParamScalar::zero()),
        }
    }

    pub fn obstructions(&self) -> Vec<Obstruction> {
        self.nonzero()
            .map(|e| Obstruction::new(ObstructionKind::Residue(e.level), e.label.clone(), e.residue.clone()))
            .collect()
    }
}

/// Solutions `[y1, y2]` for each component, the plane solution `z0` and an
/// optional integration weight, all in one variable.
pub struct ResidueBasis {
    pub blocks: [[PuiseuxSeries; 2]; 2],
    pub z0: PuiseuxSeries,
    pub weight: Option<PuiseuxSeries>,
}

impl ResidueBasis {
    pub fn from_fundamental(x: &FundamentalMatrix, z0: PuiseuxSeries) -> Self {
        let [b1, b2] = &x.blocks;
        Self {
            blocks: [[b1.y1.clone(), b1.y2.clone()], [b2.y1.clone(), b2.y2.clone()]],
            z0,
            weight: None,
        }
    }

    fn weighted(&self, s: PuiseuxSeries) -> Result<PuiseuxSeries> {
        match &self.weight {
            Some(w) => s.mul(w),
            None => Ok(s),
        }
    }

    /// `X^-1 (0, f1, 0, f2)` entries `-y2 f`, `y1 f` per component.
    fn inverse_entries(&self, comp: usize, f: &PuiseuxSeries) -> Result<[PuiseuxSeries; 2]> {
        let [y1, y2] = &self.blocks[comp];
        Ok([y2.neg().mul(f)?, y1.mul(f)?])
    }
}

const SOL: [&str; 2] = ["y1", "y2"];
const MULT: [&str; 2] = ["-y2", "y1"];

fn evaluate_form(form: &Form, values: &BTreeMap<Xi, PuiseuxSeries>, z0: &PuiseuxSeries) -> Result<PuiseuxSeries> {
    let mut acc = PuiseuxSeries::zero_exact(z0.var());
    for (mono, coef) in form.terms() {
        let mut t = coef.eval_series(z0)?;
        for x in mono {
            let v = values
                .get(x)
                .ok_or_else(|| Error::Domain(format!("no value for {x}")))?;
            t = t.mul(v)?;
        }
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

/// Every product `multiplier * coefficient(z0) * prod xi1` in the level-2
/// integrands, one per monomial and unordered choice of basis solutions.
pub fn level2_residues(basis: &ResidueBasis, rhs: &HigherVariationRHS) -> Result<Vec<ResidueEntry>> {
    let mut out = Vec::new();
    for (i, form) in rhs.components.iter().enumerate() {
        for (mono, coef) in form.terms() {
            let c = basis.weighted(coef.eval_series(&basis.z0)?)?;
            let n = mono.len();
            for mask in 0..(1usize << n) {
                let choice: Vec<usize> = (0..n).map(|k| (mask >> k) & 1).collect();
                // canonical: non-decreasing choices along runs of equal unknowns
                if (1..n).any(|k| mono[k] == mono[k - 1] && choice[k] < choice[k - 1]) {
                    continue;
                }
                let mut prod = c.clone();
                let mut names = Vec::new();
                for (x, &j) in mono.iter().zip(&choice) {
                    if x.level != 1 {
                        return Err(Error::Domain(format!("{x} in a level-2 form")));
                    }
                    prod = prod.mul(&basis.blocks[x.comp as usize - 1][j])?;
                    names.push(format!("{}({})", SOL[j], x.comp));
                }
                let [m0, m1] = basis.inverse_entries(i, &prod)?;
                for (slot, m) in [m0, m1].iter().enumerate() {
                    out.push(ResidueEntry {
                        level: 2,
                        label: format!(
                            "{}({}) * [{}] in K2({})",
                            MULT[slot],
                            i + 1,
                            names.join("*"),
                            i + 1
                        ),
                        residue: m.residue()?,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Level 3: for each `xi1` built from single basis solutions, solve the
/// level-2 system by variation of constants and take the residues of
/// `X^-1 (0, K3)`. Choices whose level-2 step already has a residue are
/// reported at level 2 and not continued.
pub fn level3_residues(basis: &ResidueBasis, k2: &HigherVariationRHS, k3: &HigherVariationRHS) -> Result<Vec<ResidueEntry>> {
    let var = basis.z0.var();
    let mut out = Vec::new();
    let opts = [None, Some(0usize), Some(1usize)];
    for c1 in opts {
        for c2 in opts {
            if c1.is_none() && c2.is_none() {
                continue;
            }
            let name = |c: Option<usize>, comp: usize| match c {
                None => "0".to_string(),
                Some(j) => format!("xi1{comp}^({})", j + 1),
            };
            let tag = format!("xi1 = ({}, {})", name(c1, 1), name(c2, 2));
            let mut values = BTreeMap::new();
            for (comp, c) in [(1u8, c1), (2u8, c2)] {
                let s = match c {
                    Some(j) => basis.blocks[comp as usize - 1][j].clone(),
                    None => PuiseuxSeries::zero_exact(var),
                };
                values.insert(Xi::new(1, comp), s);
            }
            let mut clean = true;
            for i in 0..2 {
                let f = evaluate_form(&k2.components[i], &values, &basis.z0)?;
                let f = basis.weighted(f)?;
                let [e0, e1] = basis.inverse_entries(i, &f)?;
                let (a0, r0) = e0.integrate()?;
                let (a1, r1) = e1.integrate()?;
                for (slot, r) in [r0, r1].into_iter().enumerate() {
                    if !r.is_zero() {
                        clean = false;
                        out.push(ResidueEntry {
                            level: 2,
                            label: format!("{tag}: {}({}) * K2({})", MULT[slot], i + 1, i + 1),
                            residue: r,
                        });
                    }
                }
                let [y1, y2] = &basis.blocks[i];
                let xi2 = y1.mul(&a0)?.add(&y2.mul(&a1)?)?;
                values.insert(Xi::new(2, i as u8 + 1), xi2);
            }
            if !clean {
                continue;
            }
            for i in 0..2 {
                let f = basis.weighted(evaluate_form(&k3.components[i], &values, &basis.z0)?)?;
                let [e0, e1] = basis.inverse_entries(i, &f)?;
                for (slot, e) in [e0, e1].iter().enumerate() {
                    out.push(ResidueEntry {
                        level: 3,
                        label: format!("{tag}: {}({}) * K3({})", MULT[slot], i + 1, i + 1),
                        residue: e.residue()?,
                    });
                }
            }
        }
    }
    Ok(out)
}

fn log_free(s: &LogSeries) -> Result<PuiseuxSeries> {
    if s.has_log() {
        return Err(Error::LogarithmicBasis);
    }
    Ok(s.s0.clone())
}

/// Basis in the `x` chart: Frobenius solutions at `x = 0`, `z0 = 1/x` and
/// the inverse square root weight, all expanded to `order`.
pub fn sqrt_chart_basis(params: &HamiltonianParams, order: usize) -> Result<ResidueBasis> {
    let (v1, v2) = build_ve1_x(params)?;
    let (a1, a2) = frobenius_solve(&v1, order)?;
    let (b1, b2) = frobenius_solve(&v2, order)?;
    let blocks = [
        [log_free(&a1.solution())?, log_free(&a2.solution())?],
        [log_free(&b1.solution())?, log_free(&b2.solution())?],
    ];
    // residues land at x^-1; the weight must be known well past that
    let w = series_sqrt_inverse(&weight_radicand(params), &int(order as i64))?;
    Ok(ResidueBasis {
        blocks,
        z0: PuiseuxSeries::monomial(Var::X, ParamScalar::one(), int(-1)),
        weight: Some(w.series),
    })
}

pub fn time_chart_basis(params: &HamiltonianParams, order: usize) -> Result<ResidueBasis> {
    let b = time_domain_basis(params, order)?;
    let x = b.fundamental_matrix()?;
    Ok(ResidueBasis::from_fundamental(&x, b.z0))
}

/// Largest number of precision doublings before giving up.
pub const MAX_RETRIES: usize = 3;

/// Residues for `level` in `chart`, starting at `order` and doubling it
/// whenever a residue falls beyond the known terms.
pub fn residue_obstruction(params: &HamiltonianParams, level: u8, chart: Chart, order: usize) -> Result<ResidueReport> {
    if params.h.is_zero() {
        return Err(Error::ZeroEnergy("the energy level must be nonzero for residue tests".into()));
    }
    if level == 3 && chart == Chart::SqrtWeight {
        return Err(Error::NotApplicable("level 3 runs in the time domain".into()));
    }
    let k2 = hvar_rhs(params, 2)?;
    let k3 = if level == 3 { Some(hvar_rhs(params, 3)?) } else { None };
    let mut order = order.max(4);
    for retries in 0..=MAX_RETRIES {
        let attempt = (|| -> Result<Vec<ResidueEntry>> {
            let basis = match chart {
                Chart::SqrtWeight => sqrt_chart_basis(params, order)?,
                Chart::TimeDomain => time_chart_basis(params, order)?,
            };
            match &k3 {
                None => level2_residues(&basis, &k2),
                Some(k3) => level3_residues(&basis, &k2, k3),
            }
        })();
        match attempt {
            Ok(entries) => {
                return Ok(ResidueReport {
                    level,
                    chart,
                    entries,
                    order,
                    retries,
                })
            }
            Err(Error::InsufficientPrecision { .. }) => order *= 2,
            Err(e) => return Err(e),
        }
    }
    Err(Error::PrecisionExhausted(order))
}
