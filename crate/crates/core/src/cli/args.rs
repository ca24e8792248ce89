//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "hyperlandau",
    about = "Bound states, zero modes and flux for Dirac-Weyl carriers on the hyperboloid",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bound-state spectrum
    Spectrum(SpectrumArgs),
    /// Sampled closed-form eigenfunctions and spinor density
    Eigenfunction(EigenfunctionArgs),
    /// Gauge function, magnetic field and flux on a grid
    Field(FieldArgs),
    /// Zero-energy state and its admissibility
    ZeroMode(ZeroModeArgs),
    /// Check closed forms against the finite-difference oracle
    Verify(VerifyArgs),
    /// Admissible angular momenta and level counts over a window
    Sweep(SweepArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Spectrum(_) => "spectrum",
            Command::Eigenfunction(_) => "eigenfunction",
            Command::Field(_) => "field",
            Command::ZeroMode(_) => "zero-mode",
            Command::Verify(_) => "verify",
            Command::Sweep(_) => "sweep",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum CaseName {
    #[value(name = "i")]
    I,
    #[value(name = "ii")]
    Ii,
    #[value(name = "iii")]
    Iii,
    #[value(name = "iv")]
    Iv,
    #[value(name = "tabulated")]
    Tabulated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CaseArgs {
    /// Field family
    #[arg(long = "case", value_enum)]
    pub case: CaseName,
    /// Case i: field strength
    #[arg(long = "A0", allow_hyphen_values = true)]
    pub a0: Option<f64>,
    /// Case ii parameters
    #[arg(long = "C1", allow_hyphen_values = true)]
    pub c1: Option<f64>,
    #[arg(long = "D1", allow_hyphen_values = true)]
    pub d1: Option<f64>,
    /// Case iii parameters
    #[arg(long = "C2", allow_hyphen_values = true)]
    pub c2: Option<f64>,
    #[arg(long = "D2", allow_hyphen_values = true)]
    pub d2: Option<f64>,
    /// Case iv parameters
    #[arg(long = "C3", allow_hyphen_values = true)]
    pub c3: Option<f64>,
    #[arg(long = "D3", allow_hyphen_values = true)]
    pub d3: Option<f64>,
    /// Pole strength λ′ of cases ii–iv (defaults to λ)
    #[arg(long = "lambda-prime", allow_hyphen_values = true)]
    pub lambda_prime: Option<String>,
    /// Tabulated gauge CSV with header "u,alpha"
    #[arg(long = "table")]
    pub table: Option<PathBuf>,
    /// Angular momentum: half-odd fraction such as 7/2, or any real with
    /// --relaxed [default: 1/2]
    #[arg(long = "lambda", allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Accept non-half-odd λ
    #[arg(long = "relaxed")]
    pub relaxed: bool,
    /// Hyperboloid radius
    #[arg(long = "R", default_value_t = 1.0)]
    pub radius: f64,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long = "format", value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GridArgs {
    #[arg(long = "u-min")]
    pub u_min: Option<f64>,
    #[arg(long = "u-max")]
    pub u_max: Option<f64>,
    #[arg(long = "points")]
    pub points: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    /// Also list the level sitting on the continuum edge
    #[arg(long = "include-threshold")]
    pub include_threshold: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EigenfunctionArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    /// Level index
    #[arg(long = "n")]
    pub n: usize,
    #[arg(long = "samples", default_value_t = 500)]
    pub samples: usize,
    #[arg(long = "u-max", default_value_t = 8.0)]
    pub u_max: f64,
    /// Scale so that ∫(g₁² + g₂²) du = 1 over the samples
    #[arg(long = "normalize")]
    pub normalize: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ZeroModeArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    /// Number of levels extracted from each partner
    #[arg(long = "k")]
    pub k: Option<usize>,
    /// Comma-separated reference levels replacing the closed form
    #[arg(long = "expect", value_delimiter = ',', allow_hyphen_values = true)]
    pub expect: Option<Vec<f64>>,
    #[arg(long = "rel-tol")]
    pub rel_tol: Option<f64>,
    #[arg(long = "ground-tol")]
    pub ground_tol: Option<f64>,
    #[arg(long = "near-threshold-tol")]
    pub near_threshold_tol: Option<f64>,
    #[arg(long = "pairing-tol")]
    pub pairing_tol: Option<f64>,
    #[arg(long = "intertwining-tol")]
    pub intertwining_tol: Option<f64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
/// With --lambda, only that value is evaluated instead of the window.
pub struct SweepArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    /// Window of 2λ values (odd integers inside are used)
    #[arg(
        long = "two-lambda-min",
        default_value_t = 1,
        allow_hyphen_values = true
    )]
    pub two_lambda_min: i64,
    #[arg(
        long = "two-lambda-max",
        default_value_t = 25,
        allow_hyphen_values = true
    )]
    pub two_lambda_max: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}
