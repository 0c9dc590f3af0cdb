//! Subcommand dispatch. Every command returns its full output text and exit
//! status so that runs can be compared byte for byte.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::derivation::check_hypotheses;
use crate::error::{Error, Result};
use crate::iso::{
    constants_basis, recognize_quiver, rho, round_trip, verify_isomorphism, Reconstruction, Route,
};
use crate::report::{Check, Report, Verdict};
use crate::task::{parse_task, TaskFile};

#[derive(Debug, Parser)]
#[command(
    name = "ddquiver",
    about = "Double derivations on quiver and tensor algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check idempotency, s x t = x, conditions 1 to 3 and nilpotency.
    Check { file: PathBuf },
    /// Basis of the ring of constants per degree.
    Constants {
        file: PathBuf,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Apply the exponential morphism of one derivation.
    Rho {
        file: PathBuf,
        /// 1-based derivation index.
        #[arg(long)]
        derivation: usize,
        #[arg(long)]
        element: String,
    },
    /// Apply the reconstruction A -> T_B(M).
    Rhobar {
        file: PathBuf,
        #[arg(long)]
        element: String,
        /// `desc` (default), `asc`, `direct`, or a comma-separated 1-based order.
        #[arg(long, default_value = "desc")]
        order: String,
    },
    /// Certify the reconstruction is an isomorphism up to a degree.
    Verify {
        file: PathBuf,
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Read the quiver back from the constants and the idempotents.
    Recognize { file: PathBuf },
    /// Rebuild the declared quiver through the whole pipeline.
    Roundtrip { file: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn report(report: &Report, prefix: &str) -> Self {
        Output {
            text: format!("{prefix}{report}"),
            code: if report.passed() { 0 } else { 1 },
        }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Output {
            text: format!("ERROR {e}\n"),
            code: 2,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command).unwrap_or_else(Output::error),
        Err(e) => Output {
            text: e.to_string(),
            code: e.exit_code(),
        },
    }
}

fn load(path: &PathBuf) -> Result<TaskFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse_task(&text)
}

fn degree_limit(task: &TaskFile, max: Option<usize>) -> Result<usize> {
    let d = max.unwrap_or(task.cap);
    if d > task.cap {
        return Err(Error::DegreeAboveCap {
            degree: d,
            cap: task.cap,
        });
    }
    Ok(d)
}

fn parse_order(text: &str, n: usize) -> Result<Route> {
    match text {
        "desc" => Ok(Route::descending(n)),
        "asc" => Ok(Route::ascending(n)),
        "direct" => Ok(Route::Direct),
        list => list
            .split(',')
            .map(|s| match s.trim().parse::<usize>() {
                Ok(i) if i >= 1 => Ok(i - 1),
                _ => Err(Error::Usage(format!("bad peeling order '{list}'"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Route::Iterated),
    }
}

pub fn execute(command: &Command) -> Result<Output> {
    match command {
        Command::Check { file } => {
            let task = load(file)?;
            Ok(Output::report(&check_hypotheses(&task.family)?, ""))
        }
        Command::Constants { file, max_degree } => {
            let task = load(file)?;
            let limit = degree_limit(&task, *max_degree)?;
            let c = constants_basis(&task.family, limit)?;
            let mut text = String::new();
            for (d, elements) in c.by_degree() {
                writeln!(text, "DEGREE {d} DIM {}", elements.len()).unwrap();
                for e in elements {
                    writeln!(text, "  {e}").unwrap();
                }
            }
            writeln!(text, "TOTAL {}", c.dim()).unwrap();
            Ok(Output { text, code: 0 })
        }
        Command::Rho {
            file,
            derivation,
            element,
        } => {
            let task = load(file)?;
            let n = task.family.len();
            if *derivation == 0 || *derivation > n {
                return Err(Error::Usage(format!(
                    "derivation index {derivation} out of range 1..{n}"
                )));
            }
            let a = task.algebra.parse_element(element)?;
            let value = rho(&task.family.derivations[derivation - 1], &a)?;
            Ok(Output {
                text: format!("{value}\n"),
                code: 0,
            })
        }
        Command::Rhobar {
            file,
            element,
            order,
        } => {
            let task = load(file)?;
            let hypotheses = check_hypotheses(&task.family)?;
            if !hypotheses.passed() {
                return Ok(Output::report(&hypotheses, ""));
            }
            let route = parse_order(order, task.family.len())?;
            let a = task.algebra.parse_element(element)?;
            let value = Reconstruction::new(&task.family, route)?.apply(&a)?;
            Ok(Output {
                text: format!("{value}\n"),
                code: 0,
            })
        }
        Command::Verify { file, max_degree } => {
            let task = load(file)?;
            let limit = degree_limit(&task, *max_degree)?;
            let iso = verify_isomorphism(&task.family, limit)?;
            let mut report = iso.report.clone();
            if !iso.rows.is_empty() {
                let (s, t) = iso.total_dims();
                report.notices.push(format!("total dim {s} -> {t}"));
            }
            Ok(Output::report(&report, ""))
        }
        Command::Recognize { file } => {
            let task = load(file)?;
            let constants = constants_basis(&task.family, task.cap)?;
            let mut report = Report::default();
            let mut prefix = String::new();
            match recognize_quiver(&constants, &task.family) {
                Ok(q) => {
                    report.push(Check::pass(
                        "recognize",
                        format!(
                            "{} vertices {} arrows",
                            q.vertices().len(),
                            q.arrows().len()
                        ),
                    ));
                    for line in q.to_string().lines() {
                        writeln!(prefix, "QUIVER {line}").unwrap();
                    }
                }
                Err(e) => report.push(Check::fail("recognize", e.to_string())),
            }
            Ok(Output::report(&report, &prefix))
        }
        Command::Roundtrip { file } => {
            let task = load(file)?;
            let Some(q) = &task.quiver else {
                let mut report = Report::default();
                report.push(Check::new(
                    "roundtrip",
                    Verdict::Skipped,
                    "needs a quiver file",
                ));
                return Ok(Output {
                    text: report.to_string(),
                    code: 1,
                });
            };
            let rt = round_trip(q, task.cap)?;
            let mut prefix = String::new();
            if let Some(r) = &rt.recognized {
                for line in r.to_string().lines() {
                    writeln!(prefix, "QUIVER {line}").unwrap();
                }
            }
            Ok(Output::report(&rt.report, &prefix))
        }
    }
}
