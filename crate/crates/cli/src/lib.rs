//! Command-line front end for `cspoly`.
//!
//! [`run`] parses arguments, executes one command and returns the text to
//! print together with the process exit code:
//!
//! | code | meaning                         |
//! |------|---------------------------------|
//! | 0    | success                         |
//! | 1    | a verification failed           |
//! | 2    | resonance or degeneracy         |
//! | 3    | invalid input                   |
//! | 4    | internal invariant violation    |

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cspoly::algebra::{parse_rat, IntVec, Partition, Rat};
use cspoly::eigen::Convention;
use cspoly::operators::Preset;

mod commands;
pub mod doc;
pub mod render;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_RESONANCE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_INTERNAL: u8 = 4;

/// Environment variable capping the worker-thread count.
pub const THREADS_ENV: &str = "CSPOLY_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] cspoly::Error),
    #[error("invalid input: {0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use cspoly::Error as E;
        match self {
            CliError::Core(E::Resonance { .. } | E::Degeneracy { .. }) => EXIT_RESONANCE,
            CliError::Core(E::Invariant(_)) => EXIT_INTERNAL,
            CliError::Core(E::LengthMismatch { .. } | E::InvalidInput(_)) => EXIT_INPUT,
            CliError::Usage(_) => EXIT_INPUT,
        }
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Parser)]
#[command(
    name = "cspoly",
    version,
    about = "Exact symmetric-polynomial eigenfunctions of Calogero-Sutherland type operators"
)]
pub struct Cli {
    /// Output format (`bench` always writes CSV).
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Monomial expansion of f_n.
    F(FArgs),
    /// Reduced eigenfunction P_λ of a model.
    Eig(EigArgs),
    /// Run one of the built-in identity checks.
    Verify(VerifyArgs),
    /// Two-species expansion f_{n,ñ}.
    #[command(name = "deformed-f")]
    DeformedF(DeformedArgs),
    /// Time independent routes against each other (CSV).
    Bench(BenchArgs),
    /// Apply the reduced operator of a model to a polynomial.
    Apply(ApplyArgs),
}

fn parse_rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn parse_ints(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Err("expected a comma-separated list of integers".into());
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("malformed integer {t:?}")))
        .collect()
}

fn parse_index(s: &str) -> Result<IntVec, String> {
    parse_ints(s).map(IntVec::new)
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let parts = parse_ints(s)?
        .into_iter()
        .map(|p| u32::try_from(p).map_err(|_| format!("partition parts must be nonnegative, got {p}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// Comma-separated rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatList(pub Vec<Rat>);

fn parse_rat_list(s: &str) -> Result<RatList, String> {
    s.split(',').map(parse_rational).collect::<Result<_, _>>().map(RatList)
}

fn parse_preset(s: &str) -> Result<Preset, String> {
    s.parse().map_err(|e: cspoly::Error| e.to_string())
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    s.parse().map_err(|e: cspoly::Error| e.to_string())
}

/// Which coefficient recursion builds `P_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    /// The Calogero recursion (hermite preset only).
    Calogero,
    /// General scheme with the derived eigenvalue and move coefficients.
    Derived,
    /// General scheme with the coefficients exactly as printed.
    Printed,
}

#[derive(Debug, Args)]
pub struct FArgs {
    #[arg(long = "N")]
    pub nvars: usize,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub kappa: Rat,
    /// Index n ∈ Z^N, e.g. `-1,1`.
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    pub n: IntVec,
    /// Also expand the generating function directly and compare.
    #[arg(long)]
    pub oracle: bool,
}

/// Model selection shared by the model-dependent commands. Either a preset
/// (default `calogero`) or explicit `--alpha`/`--beta` coefficients.
#[derive(Debug, Args)]
pub struct ModelArgs {
    /// hermite (alias calogero), laguerre, jacobi, bessel or sutherland.
    #[arg(long, value_parser = parse_preset)]
    pub preset: Option<Preset>,
    #[arg(long = "N")]
    pub nvars: Option<usize>,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub kappa: Option<Rat>,
    /// Preset parameter a (laguerre, jacobi, bessel).
    #[arg(long = "a", value_parser = parse_rational, allow_hyphen_values = true)]
    pub a: Option<Rat>,
    /// Preset parameter b (jacobi, bessel).
    #[arg(long = "b", value_parser = parse_rational, allow_hyphen_values = true)]
    pub b: Option<Rat>,
    /// Custom α coefficients α₂,α₁,α₀.
    #[arg(long, value_parser = parse_rat_list, allow_hyphen_values = true)]
    pub alpha: Option<RatList>,
    /// Custom β coefficients β₁,β₀.
    #[arg(long, value_parser = parse_rat_list, allow_hyphen_values = true)]
    pub beta: Option<RatList>,
}

#[derive(Debug, Args)]
pub struct EigArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Partition λ, e.g. `2,1,0`.
    #[arg(long, value_parser = parse_partition)]
    pub lambda: Partition,
    /// Basis of the emitted terms: m, f or g.
    #[arg(long, value_enum, default_value_t = doc::Basis::M)]
    pub basis: doc::Basis,
    /// Apply the operator and embed the verdict.
    #[arg(long)]
    pub verify: bool,
    /// Defaults to `calogero` for the hermite preset, `derived` otherwise.
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeArg>,
    /// Sign/order reading of the eigenvalue formula, e.g. `minus/as-given`.
    #[arg(long, value_parser = parse_convention)]
    pub convention: Option<Convention>,
    /// Keep the assembled scaling instead of making the λ term 1.
    #[arg(long)]
    pub no_normalize: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    /// The action of the operator on f_n.
    Lemma,
    /// The groundstate identity for a mass vector.
    Masses,
    /// Invertibility of the P_λ → m_μ transition matrix.
    Completeness,
    /// The constant C_N and its split-mass cross-check.
    Corollary,
    /// The eigen-relation for every |λ| ≤ maxweight.
    Eigen,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub scope: Scope,
    #[command(flatten)]
    pub model: ModelArgs,
    /// Index for `lemma`.
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    pub n: Option<IntVec>,
    /// Mass vector for `masses`.
    #[arg(long, value_parser = parse_rat_list, allow_hyphen_values = true)]
    pub masses: Option<RatList>,
    #[arg(long, default_value_t = 4)]
    pub maxweight: u32,
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeArg>,
    #[arg(long, value_parser = parse_convention)]
    pub convention: Option<Convention>,
}

#[derive(Debug, Args)]
pub struct DeformedArgs {
    #[arg(long = "N")]
    pub nvars: usize,
    #[arg(long = "Ntilde")]
    pub nvars_tilde: usize,
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    pub kappa: Rat,
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    pub n: IntVec,
    #[arg(long, value_parser = parse_index, allow_hyphen_values = true)]
    pub ntilde: IntVec,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated suites: `f` (f routes), `u` (coefficient tables).
    #[arg(long, default_value = "f,u")]
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub max_weight: u32,
    #[arg(long = "max-N", default_value_t = 2)]
    pub max_nvars: usize,
    #[arg(long, value_parser = parse_rational, default_value = "1/2", allow_hyphen_values = true)]
    pub kappa: Rat,
}

#[derive(Debug, Args)]
pub struct ApplyArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Terms `exponents:coeff` separated by `;`, e.g. `2,0:1;0,0:-3/2`.
    /// Exponents are partitions labelling m_λ unless `--raw` is given.
    #[arg(long, allow_hyphen_values = true)]
    pub terms: String,
    /// Read exponents as plain monomials x^e (no symmetry required).
    #[arg(long)]
    pub raw: bool,
    #[arg(long, value_parser = parse_convention)]
    pub convention: Option<Convention>,
}

/// Everything a process run produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    // A second call in the same process keeps the first pool.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match configure_threads().and_then(|()| commands::execute(&cli)) {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
