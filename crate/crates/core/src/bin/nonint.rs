use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nonintegrability::algebra::Var;
use nonintegrability::obstructions::galois_local_classify;
use nonintegrability::ode::{frobenius_solve, verify_solution, LinearODE2};
use nonintegrability::report::{run_analysis_with, run_sweep, AnalysisRequest, Format, SweepSpec, TestName};
use nonintegrability::Error;

/// Exact obstructions to meromorphic integrability of
/// H = (p_r^2 + p_z^2)/2 + A r^2 + B z^2 + C z^3 + D r^2 z + E z^4 + F r^2 z^2 + G r^4.
#[derive(Parser)]
#[command(name = "nonint", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the obstruction tests on one parameter point.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Print each test as it finishes (text format only).
        #[arg(long)]
        progress: bool,
    },
    /// Run a grid of parameter points in parallel.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// NAME=v1,v2,... or NAME=start:step:end; repeatable.
        #[arg(long = "axis")]
        axes: Vec<String>,
        /// Resonance values; each sets F = E(p^2 - 1)/4.
        #[arg(long)]
        p: Option<String>,
    },
    /// Frobenius solutions at x = 0 of y'' + c1 y' + c2 y = 0.
    Frobenius {
        /// c1 numerator, ascending coefficients separated by ';'.
        #[arg(long, allow_hyphen_values = true)]
        c1: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c1_den: String,
        #[arg(long, allow_hyphen_values = true)]
        c2: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c2_den: String,
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

#[derive(Args)]
struct Common {
    /// A B C D E F G as integers or fractions.
    #[arg(required = true, num_args = 7, value_names = ["A", "B", "C", "D", "E", "F", "G"], allow_negative_numbers = true)]
    params: Vec<String>,
    /// Energy of the particular solution; "symbolic" keeps it free.
    #[arg(long, default_value = "symbolic", allow_negative_numbers = true)]
    h: String,
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long, default_value = "text")]
    format: Format,
    /// Comma-separated subset of branching,gate,log,residue2,residue3,theorem.
    #[arg(long, default_value = "all")]
    tests: String,
    #[arg(long)]
    timing: bool,
}

impl Common {
    fn request(&self) -> Result<AnalysisRequest, Error> {
        let p: [&str; 7] = std::array::from_fn(|i| self.params[i].as_str());
        let mut req = AnalysisRequest::new(p).with_h(&self.h).with_order(self.order);
        req.tests = TestName::parse_list(&self.tests)?;
        req.format = self.format;
        req.timing = self.timing;
        // validate early so bad input exits with 2
        req.hamiltonian()?;
        Ok(req)
    }
}

fn status(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::ZeroEnergy(_) => 2,
        _ => 3,
    }
}

/// Ignores a closed pipe, as when the output goes through `head`.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
    if !s.ends_with('\n') {
        let _ = out.write_all(b"\n");
    }
}

fn split(s: &str) -> Vec<&str> {
    s.split(';').map(str::trim).filter(|p| !p.is_empty()).collect()
}

fn frobenius(c1: (&str, &str), c2: (&str, &str), order: usize, format: Format) -> Result<String, Error> {
    let (a, b, c, d) = (split(c1.0), split(c1.1), split(c2.0), split(c2.1));
    let ode = LinearODE2::parse(Var::X, (&a, &b), (&c, &d)).map_err(|e| Error::Parse(e.to_string()))?;
    let sols = frobenius_solve(&ode, order)?;
    let verified = verify_solution(&ode, &sols.0, order)? && verify_solution(&ode, &sols.1, order)?;
    let galois = galois_local_classify(&sols);
    Ok(match format {
        Format::Text => format!(
            "y1 = {}\ny2 = {}\nlog coefficient: {}\nlocal group: {}\nresidual vanishes: {}\n",
            sols.0, sols.1, sols.1.log_obstruction, galois, verified
        ),
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "exponents": [sols.0.exponent.to_string(), sols.1.exponent.to_string()],
            "y1": sols.0.to_string(),
            "y2": sols.1.to_string(),
            "log_coefficient": sols.1.log_obstruction.to_string(),
            "local_group": galois.to_string(),
            "verified": verified,
        }))
        .expect("json"),
    })
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.cmd {
        Cmd::Analyze { common, progress } => {
            let req = common.request()?;
            let live = progress && req.format == Format::Text;
            let report = run_analysis_with(&req, |t| {
                if live {
                    eprintln!("{}: {}({})", t.test, t.outcome, t.case_id);
                }
            })?;
            emit(&report.render());
            Ok(report.exit_code() as u8)
        }
        Cmd::Sweep { common, axes, p } => {
            let mut spec = SweepSpec::new(common.request()?);
            for a in &axes {
                spec = spec.axis(a)?;
            }
            if let Some(p) = p {
                spec = spec.with_p(&p)?;
            }
            let res = run_sweep(&spec)?;
            emit(&match common.format {
                Format::Text => res.to_text(),
                Format::Json => res.to_json(),
            });
            Ok(res.exit_code() as u8)
        }
        Cmd::Frobenius {
            c1,
            c1_den,
            c2,
            c2_den,
            order,
            format,
        } => {
            emit(&frobenius((&c1, &c1_den), (&c2, &c2_den), order, format)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("nonint: {e}");
            ExitCode::from(status(&e))
        }
    }
}
