//! Command-line front end: `report`, `sweep` and `verify`.
//!
//! Exit codes: 0 when every selected bound holds, 1 on malformed input,
//! 2 when a hypothesis fails, 3 when a bound is numerically violated
//! (3 wins over 2).

pub mod input;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{BoundReport, TheoremId};
use crate::tolerance::Tolerance;
use input::ProblemSpec;
use sweep::SweepParam;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "schwarz",
    version,
    about = "Evaluate and certify reverse Schwarz inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the selected bounds on a JSON problem or a samples CSV.
    Report {
        file: PathBuf,
        /// Aligned text instead of JSON.
        #[arg(long)]
        text: bool,
    },
    /// Evaluate one bound over a parameter grid and write CSV.
    Sweep {
        #[arg(long)]
        theorem: String,
        #[arg(long, value_enum)]
        param: SweepParam,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: PathBuf,
        /// Base problem; defaults depend on the parameter.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Geometric spacing.
        #[arg(long)]
        log: bool,
    },
    /// Check every bound on seeded random instances.
    Verify {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6,7,8")]
        dims: Vec<usize>,
    },
}

/// What `report` prints: the problem as read, plus one report per theorem.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(flatten)]
    pub problem: ProblemSpec,
    pub reports: Vec<BoundReport>,
}

pub fn exit_code(reports: &[BoundReport]) -> i32 {
    if reports.iter().any(|r| r.violated()) {
        EXIT_VIOLATION
    } else if reports.iter().any(|r| r.failure.is_some()) {
        EXIT_PRECONDITION
    } else {
        EXIT_OK
    }
}

pub fn build_report(spec: ProblemSpec) -> Result<ReportDocument> {
    let tol = spec.tolerance()?;
    let selected = spec.selected()?;
    let problem = spec.resolve()?;
    let reports = selected
        .into_iter()
        .map(|t| problem.evaluate(t, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument {
        problem: spec,
        reports,
    })
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |v| format!("{v:.12e}"))
}

pub fn render_text(doc: &ReportDocument) -> String {
    let mut s = format!(
        "{:<24} {:<10} {:>20} {:>20} {:>20} {:<8}\n",
        "theorem", "status", "lhs", "rhs", "slack", "equality"
    );
    for r in &doc.reports {
        let status = match (r.failure, r.violated()) {
            (Some(_), _) => "failed",
            (None, true) => "VIOLATED",
            (None, false) => "holds",
        };
        s.push_str(&format!(
            "{:<24} {:<10} {:>20} {:>20} {:>20} {:<8}\n",
            r.theorem.name(),
            status,
            fmt_opt(r.lhs),
            fmt_opt(r.rhs),
            fmt_opt(r.slack),
            if r.failure.is_some() {
                "-"
            } else if r.equality {
                "yes"
            } else {
                "no"
            },
        ));
        if let Some(reason) = r.failure {
            s.push_str(&format!("    reason: {reason}\n"));
        }
        for c in r.preconditions.iter().filter(|c| !c.satisfied) {
            s.push_str(&format!("    {}: {}\n", c.name, c.detail));
        }
        for c in &r.companions {
            s.push_str(&format!(
                "    {} {} <= {} ({})\n",
                c.label,
                c.lhs,
                c.rhs,
                if c.holds { "holds" } else { "VIOLATED" }
            ));
        }
    }
    s
}

fn cmd_report(file: &Path, text: bool, out: &mut dyn Write) -> Result<i32> {
    let doc = build_report(ProblemSpec::load(file)?)?;
    let body = if text {
        render_text(&doc)
    } else {
        let mut json = serde_json::to_string_pretty(&doc)
            .map_err(|e| Error::InvalidParameter(format!("serializing report: {e}")))?;
        json.push('\n');
        json
    };
    out.write_all(body.as_bytes())
        .map_err(|e| Error::InvalidParameter(format!("writing report: {e}")))?;
    Ok(exit_code(&doc.reports))
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    theorem: &str,
    param: SweepParam,
    from: f64,
    to: f64,
    steps: usize,
    out_path: &Path,
    input: Option<&PathBuf>,
    log: bool,
) -> Result<i32> {
    let theorem = TheoremId::from_name(theorem)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem `{theorem}`")))?;
    let base = input.map(|p| ProblemSpec::load(p)).transpose()?;
    let tol = match &base {
        Some(spec) => spec.tolerance()?,
        None => Tolerance::from_env(),
    };
    let values = sweep::grid(from, to, steps, log)?;
    let rows = sweep::sweep(theorem, param, &values, base.as_ref(), tol)?;
    sweep::write_csv_file(&rows, out_path)?;
    Ok(if rows.iter().any(|r| r.violated()) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

fn cmd_verify(seed: u64, n: usize, dims: &[usize], out: &mut dyn Write) -> Result<i32> {
    let summary = verify::verify(seed, n, dims, Tolerance::from_env())?;
    out.write_all(summary.render().as_bytes())
        .map_err(|e| Error::InvalidParameter(format!("writing summary: {e}")))?;
    Ok(
        if summary.violations() > 0 || summary.witness_failures() > 0 {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        },
    )
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Report { file, text } => cmd_report(file, *text, out),
        Command::Sweep {
            theorem,
            param,
            from,
            to,
            steps,
            out: path,
            input,
            log,
        } => cmd_sweep(
            theorem,
            *param,
            *from,
            *to,
            *steps,
            path,
            input.as_ref(),
            *log,
        ),
        Command::Verify { seed, n, dims } => cmd_verify(*seed, *n, dims, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn run() -> i32 {
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
