//! Command-line front end for `zetaval-core`.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zetaval_core::Rational;

pub mod decimal;
pub mod golden;
pub mod plot;
pub mod table;
pub mod value;

/// Exit code for success or an all-pass verification.
pub const EXIT_OK: i32 = 0;
/// Exit code for a failed verification, golden mismatch or I/O error.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for bad arguments.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
    /// stdout was closed by the reader, as in `zetaval ... | head -1`
    BrokenPipe,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Failure(_) | CliError::BrokenPipe => EXIT_FAILURE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failure(m) => write!(f, "error: {m}"),
            CliError::BrokenPipe => f.write_str("error: broken pipe"),
        }
    }
}

impl From<zetaval_core::Error> for CliError {
    fn from(e: zetaval_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return CliError::BrokenPipe;
        }
        CliError::Failure(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub(crate) fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    s.parse::<Rational>().map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "zetaval",
    version,
    about = "Exact special values of zeta and L-functions at non-positive integers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute a single exact value
    Value(ValueArgs),
    /// Print a table of B_n and B_{n,χ}
    Table(TableArgs),
    /// Run a named verification suite
    Verify(VerifyArgs),
    /// Sample partial-sum polynomials for plotting
    Plot(PlotArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ValueKind {
    Zeta,
    Hurwitz,
    Lvalue,
    Twisted,
    Chi4,
    Lerch,
    Bernoulli,
    Gbernoulli,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct ValueArgs {
    #[arg(value_enum)]
    pub kind: ValueKind,
    /// Argument s (non-positive for special values) or index n for Bernoulli numbers
    #[arg(long)]
    pub n: Option<i64>,
    /// Offset a, a rational such as 1/3
    #[arg(long, value_parser = parse_rational)]
    pub a: Option<Rational>,
    /// Character literal: kronecker:p, chi4, trivial:k or table:k:v1,...,vk
    #[arg(long = "char")]
    pub character: Option<String>,
    /// Lerch parameter c
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub c: Option<Rational>,
    /// Lerch index k, giving the value at s = 1 - k
    #[arg(long)]
    pub k: Option<u64>,
    /// closed-form, integral, euler-poly or hurwitz-scaled
    #[arg(long)]
    pub route: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GoldenSet {
    Appendix,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Comma-separated columns: B for B_n, or character literals
    #[arg(long, required = true)]
    pub chars: Vec<String>,
    /// Inclusive range lo..hi, or a single n
    #[arg(long, default_value = "0..12")]
    pub n: String,
    #[arg(long, value_enum, default_value_t = TableFormat::Markdown)]
    pub format: TableFormat,
    /// Compare every cell with embedded reference data
    #[arg(long, value_enum)]
    pub golden: Option<GoldenSet>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suite: String,
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub primes: Option<Vec<u64>>,
    /// Worker threads for grid suites
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotTarget {
    Sn,
    Sna,
    Phi,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct PlotArgs {
    #[arg(value_enum)]
    pub target: PlotTarget,
    /// Comma-separated indices
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    #[arg(long, value_parser = parse_rational)]
    pub a: Option<Rational>,
    /// Abscissa range lo..hi with rational endpoints
    #[arg(long, default_value = "0..1", allow_hyphen_values = true)]
    pub range: String,
    #[arg(long, default_value_t = 101)]
    pub samples: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Defaults to json for a .json output file, csv otherwise
    #[arg(long, value_enum)]
    pub format: Option<PlotFormat>,
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Value(args) => value::cmd_value(args, out),
        Command::Table(args) => table::cmd_table(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Plot(args) => plot::cmd_plot(args, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::BrokenPipe) => EXIT_FAILURE,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let suite: zetaval_core::Suite = args.suite.parse()?;
    let params = zetaval_core::SuiteParams {
        n_max: args.nmax,
        primes: args.primes.clone(),
    };
    let report = match args.jobs {
        Some(0) => return Err(CliError::Usage("--jobs must be positive".into())),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::Failure(e.to_string()))?
            .install(|| zetaval_core::run_suite(suite, &params))?,
        None => zetaval_core::run_suite(suite, &params)?,
    };
    write!(out, "{report}")?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FAILURE })
}
