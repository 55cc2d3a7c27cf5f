//! Batch front end for `trace_atlas`: parses arguments, runs one subcommand
//! and renders a JSON envelope or a CSV table.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use trace_atlas::potential::CompactSetModel;
use trace_atlas::IntPolynomial;

mod commands;
mod report;

pub use report::provenance;

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "TRACE_ATLAS_THREADS";

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

/// Settings read from the process environment.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Context {
    /// Worker thread cap; `None` leaves the rayon default.
    pub threads: Option<usize>,
    /// Seconds since the epoch stamped into reports; `None` uses the clock.
    pub timestamp: Option<i64>,
}

impl Context {
    /// Reads `TRACE_ATLAS_THREADS` and `SOURCE_DATE_EPOCH`.
    pub fn from_env() -> Result<Self, String> {
        let threads = match std::env::var(THREADS_ENV) {
            Ok(v) => match v.trim().parse::<usize>() {
                Ok(n) if n >= 1 => Some(n),
                _ => return Err(format!("{THREADS_ENV} must be a positive integer, got {v:?}")),
            },
            Err(_) => None,
        };
        let timestamp = std::env::var("SOURCE_DATE_EPOCH")
            .ok()
            .and_then(|v| v.trim().parse::<i64>().ok());
        Ok(Context { threads, timestamp })
    }
}

#[derive(Debug, Parser)]
#[command(name = "trace-atlas", version, about = "Means, Mahler measures and equilibrium diagnostics of integer polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact means, Mahler measures and a sector check for one polynomial.
    Analyze(AnalyzeArgs),
    /// Sweep of shifted Chebyshev polynomials on [0,4].
    Chebyshev(ChebyshevArgs),
    /// Moments of the equilibrium measure of a set.
    Moments(MomentsArgs),
    /// Discrete logarithmic energy of the zeros and the energy sandwich.
    Energy(EnergyArgs),
    /// Mass and height table for z^p - p!.
    Escape(EscapeArgs),
    /// Exhaustive search for totally positive polynomials.
    Search(SearchArgs),
    /// Replace weighted atoms by equal point masses.
    Discretize(DiscretizeArgs),
}

fn parse_poly(s: &str) -> Result<IntPolynomial, String> {
    IntPolynomial::parse(s).map_err(|e| e.to_string())
}

fn parse_set(s: &str) -> Result<CompactSetModel, String> {
    CompactSetModel::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Degree-ascending coefficients, e.g. 1,-3,1.
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    poly: IntPolynomial,
    /// Orders of the symmetric means.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    m: Vec<usize>,
    /// Set for the generalized Mahler measure: disk:cx,cy,r or interval:a,b.
    #[arg(long, value_parser = parse_set, default_value = "interval:0,4", allow_hyphen_values = true)]
    set: CompactSetModel,
    /// Half-angle of the sector |Arg z| <= gamma.
    #[arg(long, default_value_t = std::f64::consts::FRAC_PI_4)]
    gamma: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Table {
    Full,
    Weakstar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct ChebyshevArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    m: Vec<usize>,
    /// Cutoff radius for the mass window and the energy.
    #[arg(long = "R", default_value_t = 5.0)]
    r: f64,
    #[arg(long, value_enum, default_value_t = Table::Full)]
    table: Table,
    #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
    format: SweepFormat,
}

#[derive(Debug, Args)]
struct MomentsArgs {
    #[arg(long, value_parser = parse_set, allow_hyphen_values = true)]
    set: CompactSetModel,
    #[arg(long, value_delimiter = ',', required = true)]
    m: Vec<u32>,
}

#[derive(Debug, Args)]
struct EnergyArgs {
    #[arg(long, value_parser = parse_poly, allow_hyphen_values = true)]
    poly: IntPolynomial,
    #[arg(long = "R")]
    r: f64,
}

#[derive(Debug, Args)]
struct EscapeArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<usize>,
    #[arg(long = "R")]
    r: f64,
    #[arg(long, value_enum, default_value_t = SweepFormat::Csv)]
    format: SweepFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SearchFormat {
    Json,
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    degree: usize,
    #[arg(long = "trace-max")]
    trace_max: i64,
    /// Orders of S_m to record; each also gets its minimising record.
    #[arg(long, value_delimiter = ',')]
    m: Vec<usize>,
    /// Drop candidates with a rational root.
    #[arg(long = "exclude-rational-roots")]
    exclude_rational_roots: bool,
    #[arg(long, value_enum, default_value_t = SearchFormat::Json)]
    format: SearchFormat,
}

#[derive(Debug, Args)]
struct DiscretizeArgs {
    /// JSON file `[{"re":..,"im":..,"w":..},...]`.
    #[arg(long)]
    atoms: PathBuf,
    #[arg(long = "L")]
    l: usize,
}

/// A command that failed inside the library.
struct Failure {
    inputs: Value,
    error: Cause,
}

enum Cause {
    Module(trace_atlas::Error),
    Input(String),
}

type Rendered = Result<String, Failure>;

/// Run with the process environment.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Context::from_env() {
        Ok(ctx) => run_with(argv, &ctx),
        Err(msg) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

/// Run with an explicit context. `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, ctx: &Context) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let name = command_name(&cli.command);
    let go = || dispatch(&cli.command, ctx);
    let rendered = match ctx.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(go),
            Err(e) => {
                return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") }
            }
        },
        None => go(),
    };
    match rendered {
        Ok(stdout) => Outcome::ok(stdout),
        Err(f) => {
            let (kind, message) = match &f.error {
                Cause::Module(e) => (e.kind(), e.to_string()),
                Cause::Input(m) => ("input", m.clone()),
            };
            let body = json!({
                "command": name,
                "inputs": f.inputs,
                "error": { "kind": kind, "message": message },
                "provenance": provenance(ctx),
            });
            Outcome {
                code: 1,
                stdout: report::pretty(&body),
                stderr: format!("error: {message}\n"),
            }
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Analyze(_) => "analyze",
        Command::Chebyshev(_) => "chebyshev",
        Command::Moments(_) => "moments",
        Command::Energy(_) => "energy",
        Command::Escape(_) => "escape",
        Command::Search(_) => "search",
        Command::Discretize(_) => "discretize",
    }
}

fn dispatch(c: &Command, ctx: &Context) -> Rendered {
    match c {
        Command::Analyze(a) => commands::analyze(a, ctx),
        Command::Chebyshev(a) => commands::chebyshev(a, ctx),
        Command::Moments(a) => commands::moments(a, ctx),
        Command::Energy(a) => commands::energy(a, ctx),
        Command::Escape(a) => commands::escape(a, ctx),
        Command::Search(a) => commands::search(a, ctx),
        Command::Discretize(a) => commands::discretize(a, ctx),
    }
}
