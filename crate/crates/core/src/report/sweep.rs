use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run_analysis, AnalysisRequest, Report};
use crate::algebra::rational::{fmt_rational, parse_rational};
use crate::error::{Error, Result};
use crate::obstructions::f_for_resonance;

/// One grid axis: a parameter name and the values it takes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Axis {
    pub name: String,
    pub values: Vec<String>,
}

impl Axis {
    /// Accepts `A=1,2,5/2` or the inclusive range `A=0:1/4:2`.
    pub fn parse(spec: &str) -> Result<Self> {
        let (name, rhs) = spec
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("axis {spec:?} is not NAME=VALUES")))?;
        let name = name.trim().to_string();
        let rhs = rhs.trim();
        let values = if rhs.contains(':') {
            range_values(rhs)?
        } else {
            rhs.split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| parse_rational(s).map(|r| fmt_rational(&r)))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Self { name, values })
    }
}

fn range_values(s: &str) -> Result<Vec<String>> {
    let parts: Vec<&str> = s.split(':').map(str::trim).collect();
    let [start, step, end] = parts.as_slice() else {
        return Err(Error::Parse(format!("range {s:?} is not start:step:end")));
    };
    let (start, step, end) = (parse_rational(start)?, parse_rational(step)?, parse_rational(end)?);
    if step.is_zero() || (&end - &start).is_negative() != step.is_negative() && end != start {
        return Err(Error::Parse(format!("range {s:?} never reaches its end")));
    }
    let mut out = Vec::new();
    let mut v = start;
    while if step.is_positive() { v <= end } else { v >= end } {
        out.push(fmt_rational(&v));
        v += &step;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub base: AnalysisRequest,
    pub axes: Vec<Axis>,
    /// Resonance values; each sets `F = E (p^2 - 1)/4` after the axes apply.
    pub p_values: Vec<String>,
}

impl SweepSpec {
    pub fn new(base: AnalysisRequest) -> Self {
        Self {
            base,
            axes: vec![],
            p_values: vec![],
        }
    }

    pub fn axis(mut self, spec: &str) -> Result<Self> {
        self.axes.push(Axis::parse(spec)?);
        Ok(self)
    }

    pub fn with_p(mut self, values: &str) -> Result<Self> {
        self.p_values = Axis::parse(&format!("p={values}"))?.values;
        Ok(self)
    }

    /// Requests in row-major order, last axis fastest, `p` innermost.
    pub fn grid(&self) -> Result<Vec<AnalysisRequest>> {
        let mut reqs = vec![self.base.clone()];
        for axis in &self.axes {
            let mut next = Vec::with_capacity(reqs.len() * axis.values.len());
            for r in &reqs {
                for v in &axis.values {
                    let mut r = r.clone();
                    r.set_param(&axis.name, v.clone())?;
                    next.push(r);
                }
            }
            reqs = next;
        }
        if !self.p_values.is_empty() {
            let mut next = Vec::new();
            for r in &reqs {
                let e = parse_rational(&r.params.e)?;
                for p in &self.p_values {
                    let mut r = r.clone();
                    r.params.f = fmt_rational(&f_for_resonance(&e, &parse_rational(p)?));
                    next.push(r);
                }
            }
            reqs = next;
        }
        if reqs.is_empty() {
            return Err(Error::Parse("sweep grid is empty".into()));
        }
        Ok(reqs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepResult {
    pub reports: Vec<Report>,
    /// How many grid points ended in each summary outcome.
    pub summary: BTreeMap<String, usize>,
}

impl SweepResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("sweep serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let p = r.request.param_strings().join(" ");
            out.push_str(&format!("[{p}] h={} -> {}\n", r.request.h, r.summary));
        }
        for (k, n) in &self.summary {
            out.push_str(&format!("{k}: {n}\n"));
        }
        out
    }

    pub fn exit_code(&self) -> i32 {
        self.reports.iter().map(Report::exit_code).max().unwrap_or(0)
    }
}

/// Outcome class without the case id, used for the tally.
fn outcome_of(summary: &str) -> String {
    summary.split('(').next().unwrap_or(summary).to_string()
}

/// Runs every grid point in parallel; reports keep grid order.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    let grid = spec.grid()?;
    let reports = grid.par_iter().map(run_analysis).collect::<Result<Vec<_>>>()?;
    let mut summary = BTreeMap::new();
    for r in &reports {
        *summary.entry(outcome_of(&r.summary)).or_insert(0) += 1;
    }
    Ok(SweepResult { reports, summary })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_forms() {
        assert_eq!(Axis::parse("A=1, 2,5/2").unwrap().values, ["1", "2", "5/2"]);
        assert_eq!(Axis::parse("B=0:1/2:2").unwrap().values, ["0", "1/2", "1", "3/2", "2"]);
        assert_eq!(Axis::parse("B=1:-1:-1").unwrap().values, ["1", "0", "-1"]);
        assert!(Axis::parse("B=0:0:1").is_err());
        assert!(Axis::parse("B=0:1:-1").is_err());
        assert!(Axis::parse("B").is_err());
    }

    #[test]
    fn grid_order_and_p() {
        let base = AnalysisRequest::new(["1", "1", "1", "1", "16", "0", "1"]);
        let spec = SweepSpec::new(base).axis("A=1,2").unwrap().with_p("5/4,2").unwrap();
        let g = spec.grid().unwrap();
        assert_eq!(g.len(), 4);
        assert_eq!(g[0].params.a, "1");
        assert_eq!(g[0].params.f, "9/4");
        assert_eq!(g[1].params.f, "12");
        assert_eq!(g[2].params.a, "2");
    }

    #[test]
    fn empty_axis_is_refused() {
        let spec = SweepSpec::new(AnalysisRequest::new(["1"; 7])).axis("A=").unwrap();
        assert!(spec.grid().is_err());
    }
}
