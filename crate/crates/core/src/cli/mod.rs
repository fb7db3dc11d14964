//! Command-line front end: `dim`, `series`, `verify`, `sweep` and
//! `selftest`.
//!
//! Exit codes: 0 on success, 1 when a check reports a mismatch (the report
//! is still printed), 2 on usage errors.

mod render;
mod selftest;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::characters::{CaseParams, CharacterError, Chirality, CorrespondenceCase, Family, IrrepSpec, Params, Route};
use crate::partitions::Partition;

pub use render::{SeriesDocument, SeriesMeta};
pub use selftest::{selftest_checks, Check};

/// Environment variable holding the default truncation order.
pub const ORDER_ENV: &str = "OSP_SUPERDIM_ORDER";
/// Largest accepted truncation order.
pub const MAX_ORDER: usize = 64;
/// Largest accepted rank or label parameter.
pub const MAX_PARAM: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyTarget {
    Correspondence { case: CorrespondenceCase, params: CaseParams },
    CumminsKing { m: usize, n: usize, trials: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRange {
    pub cases: Vec<CorrespondenceCase>,
    pub max_base: usize,
    pub max_k: usize,
    pub max_p: usize,
}

/// A validated command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Request {
    Dim { spec: IrrepSpec, order: usize, format: Format },
    Series { spec: IrrepSpec, order: usize, route: Route, format: Format },
    Verify { target: VerifyTarget, order: usize, format: Format },
    Sweep { range: SweepRange, order: usize, format: Format },
    Selftest { format: Format },
}

#[derive(Debug, Error)]
pub enum CliError {
    /// `--help` or `--version`; printed to stdout, exit 0.
    #[error("{0}")]
    Info(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Character(#[from] CharacterError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Parser, Debug)]
#[command(name = "osp-superdim", version, about = "Exact t-dimensions and superdimensions of orthosymplectic irreps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension or superdimension at t = 1 (gl families: by three formulas)
    Dim {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Truncated t-dimension or superdimension series
    Series {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value = "sum", value_parser = parse_route)]
        route: Route,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the two sides of one correspondence, or run the randomized
    /// Littlewood identity check (`--case cummins-king`)
    Verify {
        #[arg(long)]
        case: String,
        #[arg(long, value_parser = parse_param)]
        base: Option<usize>,
        #[arg(long, value_parser = parse_param)]
        k: Option<usize>,
        #[arg(long, value_parser = parse_param)]
        p: Option<usize>,
        #[arg(long, value_parser = parse_param)]
        m: Option<usize>,
        #[arg(long, value_parser = parse_param)]
        n: Option<usize>,
        #[arg(long, value_parser = parse_trials)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify every correspondence case over a parameter box
    Sweep {
        /// A case name or `all`
        #[arg(long, default_value = "all")]
        case: String,
        #[arg(long, default_value_t = 4, value_parser = parse_param)]
        max_base: usize,
        #[arg(long, default_value_t = 4, value_parser = parse_param)]
        max_k: usize,
        #[arg(long, default_value_t = 4, value_parser = parse_param)]
        max_p: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Recompute the reference values and report each one
    Selftest {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long, value_parser = parse_param)]
    m: Option<usize>,
    #[arg(long, value_parser = parse_param)]
    n: Option<usize>,
    #[arg(long, value_parser = parse_param)]
    k: Option<usize>,
    #[arg(long, value_parser = parse_param)]
    p: Option<usize>,
    /// `last` for [0,…,0,p], `next-to-last` for [0,…,p,0]
    #[arg(long, value_parser = parse_chirality)]
    chirality: Option<Chirality>,
    /// Comma-separated parts, e.g. 5,4,4,2
    #[arg(long, value_parser = parse_lambda)]
    lambda: Option<Partition>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, env = ORDER_ENV, default_value_t = crate::series::DEFAULT_ORDER, value_parser = parse_order)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_family(s: &str) -> Result<Family, CharacterError> {
    s.parse()
}

fn parse_route(s: &str) -> Result<Route, CharacterError> {
    s.parse()
}

fn parse_chirality(s: &str) -> Result<Chirality, CharacterError> {
    s.parse()
}

fn bounded(s: &str, max: usize) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("{s:?} is not a non-negative integer"))?;
    if v > max {
        return Err(format!("{v} exceeds the limit {max}"));
    }
    Ok(v)
}

fn parse_param(s: &str) -> Result<usize, String> {
    bounded(s, MAX_PARAM)
}

fn parse_order(s: &str) -> Result<usize, String> {
    bounded(s, MAX_ORDER)
}

fn parse_trials(s: &str) -> Result<usize, String> {
    bounded(s, 1000)
}

fn parse_lambda(s: &str) -> Result<Partition, String> {
    let lambda: Partition = s.parse().map_err(|e| format!("{e}"))?;
    if lambda.weight() > MAX_ORDER {
        return Err(format!("weight {} exceeds the limit {MAX_ORDER}", lambda.weight()));
    }
    Ok(lambda)
}

fn build_spec(args: SpecArgs) -> Result<IrrepSpec, CliError> {
    let params = Params {
        m: args.m,
        n: args.n,
        k: args.k,
        p: args.p,
        chirality: args.chirality,
        lambda: args.lambda,
    };
    Ok(IrrepSpec::new(args.family, params)?)
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn reject(case: &str, flag: &str, value: bool) -> Result<(), CliError> {
    if value {
        Err(usage(format!("case {case} does not take --{flag}")))
    } else {
        Ok(())
    }
}

/// Parses and validates a command line (`args[0]` is the program name).
pub fn parse<I, T>(args: I) -> Result<Request, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        use clap::error::ErrorKind;
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliError::Info(e.to_string()),
            _ => CliError::Usage(e.to_string().trim_start_matches("error: ").trim_end().to_string()),
        }
    })?;
    match cli.command {
        Command::Dim { spec, out } => Ok(Request::Dim {
            spec: build_spec(spec)?,
            order: out.order,
            format: out.format,
        }),
        Command::Series { spec, route, out } => Ok(Request::Series {
            spec: build_spec(spec)?,
            order: out.order,
            route,
            format: out.format,
        }),
        Command::Verify {
            case,
            base,
            k,
            p,
            m,
            n,
            trials,
            seed,
            out,
        } => {
            let target = if case == "cummins-king" {
                for (flag, given) in [("base", base.is_some()), ("k", k.is_some()), ("p", p.is_some())] {
                    reject(&case, flag, given)?;
                }
                let m = m.ok_or_else(|| usage("case cummins-king requires --m"))?;
                let n = n.ok_or_else(|| usage("case cummins-king requires --n"))?;
                if m == 0 || n == 0 {
                    return Err(usage("case cummins-king needs --m and --n at least 1"));
                }
                let trials = trials.unwrap_or(5);
                if trials == 0 {
                    return Err(usage("--trials must be at least 1"));
                }
                VerifyTarget::CumminsKing {
                    m,
                    n,
                    trials,
                    seed: seed.unwrap_or(0),
                }
            } else {
                let parsed: CorrespondenceCase = case.parse()?;
                for (flag, given) in [("m", m.is_some()), ("n", n.is_some()), ("trials", trials.is_some()), ("seed", seed.is_some())] {
                    reject(&case, flag, given)?;
                }
                let p = p.ok_or_else(|| usage(format!("case {case} requires --p")))?;
                let k = if parsed.uses_k() {
                    k.ok_or_else(|| usage(format!("case {case} requires --k")))?
                } else {
                    reject(&case, "k", k.is_some())?;
                    0
                };
                let base = if parsed == CorrespondenceCase::D21 {
                    reject(&case, "base", base.is_some())?;
                    0
                } else {
                    base.unwrap_or(1)
                };
                VerifyTarget::Correspondence {
                    case: parsed,
                    params: CaseParams { base, k, p },
                }
            };
            Ok(Request::Verify {
                target,
                order: out.order,
                format: out.format,
            })
        }
        Command::Sweep {
            case,
            max_base,
            max_k,
            max_p,
            out,
        } => {
            let cases = if case == "all" {
                CorrespondenceCase::ALL.to_vec()
            } else {
                vec![case.parse()?]
            };
            Ok(Request::Sweep {
                range: SweepRange {
                    cases,
                    max_base,
                    max_k,
                    max_p,
                },
                order: out.order,
                format: out.format,
            })
        }
        Command::Selftest { format } => Ok(Request::Selftest { format }),
    }
}

/// Parses `args`, executes the request and writes the result; returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = parse(args).and_then(|request| render::execute(&request, out));
    match result {
        Ok(code) => code,
        Err(CliError::Info(text)) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
