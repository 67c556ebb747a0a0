//! The `distbound` command: argument parsing, dispatch and exit codes.
//!
//! Exit codes: `0` success, `2` input error (unreadable file, malformed or
//! invalid document, bad arguments), `3` capability error (the input is
//! valid but the requested analysis does not apply to it).

use std::ffi::OsString;
use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use distbound_core::arith::dim_p;
use distbound_core::bounds::{assemble_report, lrs_report, BoundInput, SearchConfig, DEFAULT_PRIME_LIMIT};
use distbound_core::verify::verify_point_set;
use serde::Serialize;

use crate::input::parse_input;
use crate::output::{CertifyJson, DimsJson, LrsJson, ReportJson, VerifyJson};
use crate::search::parallel_search;
use crate::text;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAPABILITY: u8 = 3;

/// Largest `s` accepted by `dims`, to keep the table finite in practice.
const MAX_DIMS_S: u64 = 10_000;

#[derive(Parser, Debug)]
#[command(
    name = "distbound",
    version,
    about = "Certified upper bounds on Euclidean s-distance sets with algebraic squared distances"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Search prime ideals above every prime up to this limit.
    #[arg(long, global = true, default_value_t = DEFAULT_PRIME_LIMIT, value_parser = clap::value_parser!(u64).range(2..))]
    prime_limit: u64,

    /// Seed for the randomized polynomial factorization mod p (results do not depend on it).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format; defaults to text on a terminal and json otherwise.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Worker threads for the certificate search (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Absolute, mod-p and LRS bounds combined.
    Bound(InputArgs),
    /// Mod-p certificate search only.
    Certify(InputArgs),
    /// LRS ratio analysis only.
    Lrs(InputArgs),
    /// Rebuild and check the evaluation and LRS matrices (needs points).
    Verify(InputArgs),
    /// Print dim P_s(R^d) for s' = 0..=s.
    Dims {
        /// Dimension of the ambient space.
        d: u64,
        /// Number of distances.
        s: u64,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input JSON file (`-` or nothing reads standard input).
    #[arg(long = "input", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Input JSON file, as an alternative to --input.
    #[arg(value_name = "PATH")]
    path: Option<PathBuf>,
}

/// What the process should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn capability(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CAPABILITY,
            message: message.into(),
        }
    }
}

/// Runs the command line `args` (including the program name).
/// `read_stdin` is called only when no input path is given or it is `-`.
pub fn run<I, T>(args: I, stdout_is_tty: bool, read_stdin: impl FnOnce() -> io::Result<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let format = cli.format.unwrap_or(if stdout_is_tty { Format::Text } else { Format::Json });
    match dispatch(&cli, format, read_stdin) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn emit<T: Serialize>(value: &T, format: Format, render: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => render(value),
    }
}

fn load(args: &InputArgs, read_stdin: impl FnOnce() -> io::Result<String>) -> Result<BoundInput, Failure> {
    let path = match (&args.input, &args.path) {
        (Some(_), Some(_)) => return Err(Failure::input("give the input either with --input or as a positional path")),
        (Some(p), None) | (None, Some(p)) => Some(p),
        (None, None) => None,
    };
    let (name, text) = match path {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p)
                .map_err(|e| Failure::input(format!("cannot read {}: {e}", p.display())))?;
            (p.display().to_string(), text)
        }
        _ => (
            "<stdin>".to_string(),
            read_stdin().map_err(|e| Failure::input(format!("cannot read standard input: {e}")))?,
        ),
    };
    parse_input(&text).map_err(|e| Failure::input(format!("{name}: {e}")))
}

fn input_path(input: &BoundInput) -> &'static str {
    match input {
        BoundInput::Points(_) => "$.points",
        BoundInput::Distances { .. } => "$.distances",
    }
}

fn dispatch(cli: &Cli, format: Format, read_stdin: impl FnOnce() -> io::Result<String>) -> Result<String, Failure> {
    let cfg = SearchConfig {
        prime_limit: cli.prime_limit,
        seed: cli.seed,
    };
    let args = match &cli.command {
        Command::Dims { d, s } => return dims(*d, *s, format),
        Command::Bound(a) | Command::Certify(a) | Command::Lrs(a) | Command::Verify(a) => a,
    };
    let input = load(args, read_stdin)?;
    let distances = input
        .distance_set()
        .map_err(|e| Failure::input(format!("{}: {e}", input_path(&input))))?;
    let d = input.dim();

    match &cli.command {
        Command::Bound(_) | Command::Certify(_) => {
            let search = parallel_search(&distances, d, &cfg, cli.jobs);
            let report = assemble_report(&input, distances, search)
                .map_err(|e| Failure::input(format!("{}: {e}", input_path(&input))))?;
            Ok(if matches!(cli.command, Command::Bound(_)) {
                emit(&ReportJson::new(&report, cfg.prime_limit), format, text::report)
            } else {
                emit(&CertifyJson::new(&report, cfg.prime_limit), format, text::certify)
            })
        }
        Command::Lrs(_) => {
            if distances.s() < 2 {
                return Err(Failure::capability(format!(
                    "{}: LRS ratios need at least two distinct distances, found {}",
                    input_path(&input),
                    distances.s()
                )));
            }
            let report = lrs_report(&distances, d).map_err(|e| Failure::input(e.to_string()))?;
            Ok(emit(&LrsJson::new(&report), format, text::lrs_only))
        }
        Command::Verify(_) => {
            let BoundInput::Points(points) = &input else {
                return Err(Failure::capability(
                    "$.distances: verify needs point coordinates; a distance list does not determine which pairs realize each distance",
                ));
            };
            let search = parallel_search(&distances, d, &cfg, cli.jobs);
            let report = verify_point_set(points, &search).map_err(|e| Failure::input(format!("$.points: {e}")))?;
            Ok(emit(&VerifyJson::new(&report), format, text::verify))
        }
        Command::Dims { .. } => unreachable!("handled above"),
    }
}

fn dims(d: u64, s: u64, format: Format) -> Result<String, Failure> {
    if d == 0 {
        return Err(Failure::input("dims: d must be positive"));
    }
    if s > MAX_DIMS_S {
        return Err(Failure::input(format!("dims: s must be at most {MAX_DIMS_S}")));
    }
    let table: Vec<_> = (0..=s)
        .map(|k| (k, dim_p(d, k).expect("d is positive")))
        .collect();
    Ok(emit(&DimsJson::new(d, &table), format, text::dims))
}
