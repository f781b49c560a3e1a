//! `bm`: exact Boros–Moll computations and inequality sweeps.
//!
//! Exit status: 0 when every verdict is as expected, 1 on an unexpected
//! violation or internal failure, 2 when some result is inconclusive, 3 on a
//! usage error, 4 when the elementary-symmetric oracle finds a
//! counterexample.

mod commands;
mod emit;
mod expected;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bm_core::error::Error as CoreError;
use bm_core::seq::DEFAULT_BIT_BUDGET;
use clap::{Parser, Subcommand};

use commands::{BoundsArgs, CertsArgs, ComputeArgs, CriteriaArgs, DiagArgs, VerifyArgs};
use emit::{Format, Record};
use expected::{Expectations, Status};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_USAGE: u8 = 3;
pub const EXIT_COUNTEREXAMPLE: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "bm", version, about = "Exact Boros-Moll numbers and inequality verification")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Shorthand for `--format csv`.
    #[arg(long, global = true)]
    csv: bool,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "BM_THREADS")]
    threads: Option<usize>,
    /// Bit-size budget for n-th root cross-powering.
    #[arg(long, global = true, default_value_t = DEFAULT_BIT_BUDGET)]
    bit_budget: u64,
    /// JSON file replacing the built-in expected-verdict table.
    #[arg(long, global = true)]
    expected: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print d_i(m) (or d_i(m)/(i+k)!) as exact rationals.
    Compute(ComputeArgs),
    /// Check a sequence property over a family of Boros-Moll sequences.
    Verify(VerifyArgs),
    /// Compare Boros-Moll ratios against the closed-form bounds.
    Bounds(BoundsArgs),
    /// Run the generic criteria on the Boros-Moll instance.
    Criteria(CriteriaArgs),
    /// Verify polynomial identities and positivity certificates.
    Certs(CertsArgs),
    /// Analyse the diagonal ratio and print its numerator coefficients.
    Diag(DiagArgs),
}

/// Failures that end a run before any output is written.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(CoreError),
    Io(std::io::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain(_) | CoreError::WindowTooShort(_) | CoreError::UnknownCertificate(_) | CoreError::Parse { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Records from one subcommand, plus an exit status that overrides the
/// verdict-derived one.
pub struct Output {
    pub records: Vec<Record>,
    pub forced_exit: Option<u8>,
}

impl From<Vec<Record>> for Output {
    fn from(records: Vec<Record>) -> Self {
        Output { records, forced_exit: None }
    }
}

pub struct Settings {
    pub bit_budget: u64,
}

fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let settings = Settings { bit_budget: cli.bit_budget };
    match &cli.command {
        Command::Compute(a) => commands::compute(a),
        Command::Verify(a) => commands::verify(a, &settings),
        Command::Bounds(a) => commands::bounds(a),
        Command::Criteria(a) => commands::criteria(a, &settings),
        Command::Certs(a) => commands::certs(a),
        Command::Diag(a) => commands::diag(a),
    }
}

/// Attaches the expected-verdict reason to matching reports and returns the
/// worst status over all records.
fn classify(records: &mut [Record], table: &Expectations) -> Status {
    let mut worst = Status::Ok;
    for rec in records.iter_mut() {
        let Some((property, params, verdict)) = rec.verdict_key() else { continue };
        let status = table.classify(&property, &params, verdict);
        if status == Status::Ok && verdict != bm_core::report::Verdict::HoldsStrictly {
            if let (Record::Report(r), Some(rule)) = (&mut *rec, table.lookup(&property, &params)) {
                *r = r.clone().note(format!("expected {}: {}", rule.verdict, rule.reason));
            }
        }
        worst = worst.max(status);
    }
    worst
}

fn run() -> Result<u8, CliError> {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return Ok(code);
        }
    };
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let table = match &cli.expected {
        Some(p) => Expectations::load(p).map_err(CliError::Usage)?,
        None => Expectations::builtin(),
    };
    let format = if cli.json {
        Format::Json
    } else if cli.csv {
        Format::Csv
    } else {
        cli.format
    };
    let mut out = dispatch(&cli)?;
    let status = classify(&mut out.records, &table);
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    emit::write_records(&mut lock, &out.records, format)?;
    lock.flush()?;
    Ok(out.forced_exit.unwrap_or(match status {
        Status::Ok => EXIT_OK,
        Status::Inconclusive => EXIT_INCONCLUSIVE,
        Status::Unexpected => EXIT_VIOLATION,
    }))
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `bm --help` for usage");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VIOLATION)
        }
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::from(EXIT_OK),
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}
