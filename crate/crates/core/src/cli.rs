//! Command-line front end behind the `specht` binary.
//!
//! Exit codes: 0 pass, 1 mathematical check failed, 2 resource cap, 3 bad input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dmodule::{schur_image_check, DModuleReportRow, InvariantMap, InvariantOperator};
use crate::error::{Error, Result};
use crate::idempotents::WedderburnData;
use crate::specht::{higher_specht, TwistConvention};
use crate::tableaux::{dimension, enumerate_diagrams, MultiDiagram, RTableau};
use crate::verify::{run_suite, Suite, VerifyConfig};
use crate::wreath::{group_order, Group, DEFAULT_GROUP_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_BAD_INPUT: i32 = 3;

/// Environment variable overriding the group-order cap.
pub const CAP_ENV: &str = "SPECHT_CAP";

#[derive(Parser, Debug)]
#[command(name = "specht", version, about = "Higher Specht polynomials for G(r,n) = (Z/rZ) ≀ S_n")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Order of the cyclic factor.
    #[arg(short = 'r', global = true)]
    pub r: Option<u32>,
    /// Number of variables.
    #[arg(short = 'n', global = true)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = ConventionArg::NuMinusOne, global = true)]
    pub convention: ConventionArg,
    /// Seed for sampled checks and generic-point retries.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Ignore the group-order cap.
    #[arg(long, global = true)]
    pub force: bool,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// List the r-diagrams of size n with their dimensions.
    Diagrams,
    /// Print one higher Specht polynomial F_T^S.
    Specht {
        /// Shape as JSON, e.g. '[[1],[1]]'; inferred from S when omitted.
        #[arg(long)]
        shape: Option<String>,
        /// Tableau S as JSON, e.g. '[[[1]],[[2]]]'.
        #[arg(short = 'S', long = "s")]
        s: String,
        /// Tableau T as JSON.
        #[arg(short = 'T', long = "t")]
        t: String,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Shapes with dimensions, multiplicities and generators.
    DecompReport,
    /// Classify invariant-operator images of every Specht module.
    DmoduleCheck {
        /// Operators such as euler, power_lower(1), mult_invariant(2); all families by default.
        #[arg(long = "operator")]
        operators: Vec<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConventionArg {
    Nu,
    NuMinusOne,
}

impl From<ConventionArg> for TwistConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Nu => TwistConvention::Nu,
            ConventionArg::NuMinusOne => TwistConvention::NuMinusOne,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteArg {
    Group,
    Specht,
    Idempotents,
    Dmodule,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Group => Suite::Group,
            SuiteArg::Specht => Suite::Specht,
            SuiteArg::Idempotents => Suite::Idempotents,
            SuiteArg::Dmodule => Suite::Dmodule,
            SuiteArg::All => Suite::All,
        }
    }
}

/// Rendered output plus whether every check passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::DegreeBound { .. } => EXIT_CAP,
        Error::InvalidInput(_)
        | Error::NotStandard(_)
        | Error::ShapeMismatch
        | Error::ParameterMismatch(..)
        | Error::IndexOutOfRange { .. }
        | Error::ArityMismatch(..)
        | Error::OrderMismatch(..) => EXIT_BAD_INPUT,
        _ => EXIT_CHECK_FAILED,
    }
}

/// Parses `op` names as printed in reports.
pub fn parse_operator(s: &str) -> Result<InvariantOperator> {
    let bad = || Error::InvalidInput(format!("unknown operator {s:?}"));
    if s == "euler" {
        return Ok(InvariantOperator::Euler);
    }
    let (name, arg) = s.strip_suffix(')').and_then(|t| t.split_once('(')).ok_or_else(bad)?;
    let k: usize = arg.trim().parse().map_err(|_| bad())?;
    match name {
        "power_lower" => Ok(InvariantOperator::PowerLower(k as u32)),
        "mult_invariant" => Ok(InvariantOperator::MultInvariant(k)),
        "partial_x" => Ok(InvariantOperator::PartialX(k)),
        _ => Err(bad()),
    }
}

struct Config {
    r: u32,
    n: usize,
    convention: TwistConvention,
    seed: u64,
    format: Format,
    cap: u128,
}

fn cap_from_env(force: bool) -> Result<u128> {
    if force {
        return Ok(u128::MAX);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::InvalidInput(format!("{CAP_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_GROUP_CAP),
    }
}

fn config(g: &GlobalArgs) -> Result<Config> {
    let r = g.r.ok_or_else(|| Error::InvalidInput("missing -r".into()))?;
    let n = g.n.ok_or_else(|| Error::InvalidInput("missing -n".into()))?;
    if r == 0 || n == 0 {
        return Err(Error::InvalidInput("r and n must be positive".into()));
    }
    let cap = cap_from_env(g.force)?;
    let order = group_order(r, n).unwrap_or(u128::MAX);
    if order > cap {
        return Err(Error::CapExceeded { what: "group order r^n·n!", value: order, cap });
    }
    Ok(Config { r, n, convention: g.convention.into(), seed: g.seed, format: g.format, cap })
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("{what}: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct DiagramRow {
    shape: MultiDiagram,
    dim: usize,
}

/// Runs a parsed command and renders its output.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Diagrams => {
            let cfg = config(&cli.global)?;
            let rows: Vec<DiagramRow> =
                enumerate_diagrams(cfg.r, cfg.n).into_iter().map(|shape| DiagramRow { dim: dimension(&shape), shape }).collect();
            let output = match cfg.format {
                Format::Json => to_json(&rows),
                Format::Text => rows.iter().fold(String::new(), |mut s, row| {
                    let _ = writeln!(s, "{}\t{}", row.shape, row.dim);
                    s
                }),
            };
            Ok(Outcome { output, passed: true })
        }
        Command::Specht { shape, s, t } => {
            let s: RTableau = parse_json("S", s)?;
            let t: RTableau = parse_json("T", t)?;
            if let Some(shape) = shape {
                let shape: MultiDiagram = parse_json("shape", shape)?;
                if shape != s.shape() || shape != t.shape() {
                    return Err(Error::ShapeMismatch);
                }
            }
            let (r, n) = (s.components().len() as u32, s.size());
            if cli.global.r.is_some_and(|v| v != r) || cli.global.n.is_some_and(|v| v != n) {
                return Err(Error::ParameterMismatch(cli.global.r.unwrap_or(r), cli.global.n.unwrap_or(n), r, n));
            }
            let record = higher_specht(&s, &t, cli.global.convention.into())?;
            let output = match cli.global.format {
                Format::Json => to_json(&record),
                Format::Text => format!(
                    "shape: {}\nS: {}\nT: {}\npoly: {}\nconvention: {}\n",
                    record.shape, record.s, record.t, record.poly, record.convention
                ),
            };
            Ok(Outcome { output, passed: true })
        }
        Command::Verify { suite } => {
            let cfg = config(&cli.global)?;
            let vc = VerifyConfig { r: cfg.r, n: cfg.n, convention: cfg.convention, seed: cfg.seed, cap: cfg.cap };
            let report = run_suite(&vc, (*suite).into())?;
            let output = match cfg.format {
                Format::Json => to_json(&report),
                Format::Text => report.to_text(),
            };
            Ok(Outcome { output, passed: report.passed })
        }
        Command::DecompReport => {
            let cfg = config(&cli.global)?;
            let group = Arc::new(Group::new(cfg.r, cfg.n, cfg.cap)?);
            let rows = WedderburnData::build(group, cfg.convention)?.multiplicity_report()?;
            let output = match cfg.format {
                Format::Json => to_json(&rows),
                Format::Text => rows.iter().fold(String::new(), |mut s, row| {
                    let _ = writeln!(s, "{}\tdim {}\tmult {}\t{}", row.shape, row.dim, row.mult, row.generator.poly);
                    s
                }),
            };
            Ok(Outcome { output, passed: true })
        }
        Command::DmoduleCheck { operators } => {
            let cfg = config(&cli.global)?;
            let ops = if operators.is_empty() {
                InvariantOperator::standard_families(cfg.n)
            } else {
                operators.iter().map(|s| parse_operator(s)).collect::<Result<Vec<_>>>()?
            };
            if let Some(op) = ops.iter().find(|op| matches!(op, InvariantOperator::PartialX(_))) {
                return Err(Error::InvalidInput(format!("{op} is not an invariant operator")));
            }
            let map = InvariantMap::build(cfg.r, cfg.n)?;
            let group = Arc::new(Group::new(cfg.r, cfg.n, cfg.cap)?);
            let w = WedderburnData::build(group, cfg.convention)?;
            let mut rows: Vec<DModuleReportRow> = Vec::new();
            for b in w.blocks() {
                for &op in &ops {
                    rows.push(schur_image_check(&w, &map, b.module().s(), op)?);
                }
            }
            let output = match cfg.format {
                Format::Json => to_json(&rows),
                Format::Text => rows.iter().fold(String::new(), |mut s, row| {
                    let _ = writeln!(s, "{}\t{}\t{}\t{}", row.shape, row.operator, row.verdict, row.degree);
                    s
                }),
            };
            Ok(Outcome { output, passed: true })
        }
    }
}

/// Parses arguments, runs the command, writes output and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_BAD_INPUT,
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = match &cli.global.output {
                Some(path) => std::fs::write(path, &outcome.output),
                None => {
                    print!("{}", outcome.output);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return EXIT_BAD_INPUT;
            }
            if outcome.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Outcome> {
        execute(&Cli::try_parse_from(std::iter::once("specht").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn diagrams_counts() {
        let out = exec(&["diagrams", "-r", "2", "-n", "2"]).unwrap().output;
        let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
        let dims: Vec<u64> = rows.iter().map(|r| r["dim"].as_u64().unwrap()).collect();
        assert_eq!(dims, [1, 1, 2, 1, 1]);
    }

    #[test]
    fn operator_names_round_trip() {
        for op in [
            InvariantOperator::Euler,
            InvariantOperator::PowerLower(2),
            InvariantOperator::MultInvariant(1),
            InvariantOperator::PartialX(3),
        ] {
            assert_eq!(parse_operator(&op.to_string()).unwrap(), op);
        }
        assert!(parse_operator("laplace").is_err());
    }

    #[test]
    fn error_codes() {
        assert!(exec(&["diagrams", "-r", "5", "-n", "5", "--force"]).is_ok());
        let err = exec(&["verify", "-r", "3", "-n", "6"]).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_CAP);
        let err = exec(&["specht", "-S", "[[[2],[1]]]", "-T", "[[[1],[2]]]"]).unwrap_err();
        assert_eq!(exit_code(&err), EXIT_BAD_INPUT);
    }
}
