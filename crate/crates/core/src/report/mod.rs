//! Requests, reports and the analysis driver behind the `nonint` binary.

mod analysis;
mod sweep;
mod text;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use analysis::{run_analysis, run_analysis_with, Discrepancy};
pub use sweep::{run_sweep, Axis, SweepResult, SweepSpec};

use crate::error::{Error, Result};
use crate::variational::{HamiltonianParams, RationalParams};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TestName {
    Branching,
    Gate,
    Log,
    Residue2,
    Residue3,
    Theorem,
}

impl TestName {
    pub const ALL: [TestName; 6] = [
        TestName::Branching,
        TestName::Gate,
        TestName::Log,
        TestName::Residue2,
        TestName::Residue3,
        TestName::Theorem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TestName::Branching => "branching",
            TestName::Gate => "gate",
            TestName::Log => "log",
            TestName::Residue2 => "residue2",
            TestName::Residue3 => "residue3",
            TestName::Theorem => "theorem",
        }
    }

    /// Parses a comma-separated list; `all` expands to every test.
    pub fn parse_list(s: &str) -> Result<Vec<TestName>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Self::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        if out.is_empty() {
            return Err(Error::Parse("empty test list".into()));
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl FromStr for TestName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown test {s:?}")))
    }
}

impl fmt::Display for TestName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRequest {
    pub params: RationalParams,
    /// Fraction string or `"symbolic"`.
    pub h: String,
    pub tests: Vec<TestName>,
    pub order: usize,
    pub format: Format,
    /// Wall-clock timing breaks byte-identical output, so it is opt-in.
    #[serde(default)]
    pub timing: bool,
}

impl AnalysisRequest {
    pub fn new(params: [&str; 7]) -> Self {
        let s = |i: usize| params[i].to_string();
        Self {
            params: RationalParams {
                a: s(0),
                b: s(1),
                c: s(2),
                d: s(3),
                e: s(4),
                f: s(5),
                g: s(6),
            },
            h: "symbolic".into(),
            tests: TestName::ALL.to_vec(),
            order: 12,
            format: Format::Text,
            timing: false,
        }
    }

    pub fn with_tests(mut self, tests: &[TestName]) -> Self {
        self.tests = tests.to_vec();
        self
    }

    pub fn with_h(mut self, h: &str) -> Self {
        self.h = h.into();
        self
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order = order;
        self
    }

    pub fn param_strings(&self) -> [&str; 7] {
        let p = &self.params;
        [&p.a, &p.b, &p.c, &p.d, &p.e, &p.f, &p.g].map(String::as_str)
    }

    /// Validates fractions and the order.
    pub fn hamiltonian(&self) -> Result<HamiltonianParams> {
        if self.order < 4 {
            return Err(Error::Parse(format!("order {} below 4", self.order)));
        }
        HamiltonianParams::parse(&self.param_strings(), Some(self.h.as_str()))
    }

    pub fn set_param(&mut self, name: &str, value: String) -> Result<()> {
        let p = &mut self.params;
        let slot = match name {
            "A" | "a" => &mut p.a,
            "B" | "b" => &mut p.b,
            "C" | "c" => &mut p.c,
            "D" | "d" => &mut p.d,
            "E" | "e" => &mut p.e,
            "F" | "f" => &mut p.f,
            "G" | "g" => &mut p.g,
            "h" => &mut self.h,
            _ => return Err(Error::Parse(format!("unknown parameter {name:?}"))),
        };
        *slot = value;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub kind: String,
    pub label: String,
    pub value: String,
    /// Factored numerator, when the witness is symbolic.
    pub locus: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TestRecord {
    pub test: TestName,
    pub outcome: String,
    pub case_id: String,
    pub witnesses: Vec<WitnessRecord>,
    pub note: Option<String>,
    /// Series order that succeeded, for the expansion-based tests.
    pub order_used: Option<usize>,
    pub precision_retries: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub request: AnalysisRequest,
    /// Overall outcome: the theorem verdict when it ran, otherwise the
    /// first non-integrability finding.
    pub summary: String,
    pub tests: Vec<TestRecord>,
    pub errors: Vec<ErrorRecord>,
    pub paper_discrepancies: Vec<Discrepancy>,
    pub timing_ms: Option<u64>,
}

impl Report {
    /// 0 for any completed analysis, 3 when a structural error was hit.
    pub fn exit_code(&self) -> i32 {
        if self.errors.is_empty() {
            0
        } else {
            3
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render(&self) -> String {
        match self.request.format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
        }
    }

    pub fn test(&self, t: TestName) -> Option<&TestRecord> {
        self.tests.iter().find(|r| r.test == t)
    }
}
