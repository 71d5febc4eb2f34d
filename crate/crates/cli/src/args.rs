//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use eorbit_core::scalar::parse_weight;
use eorbit_core::Weight;

use crate::verify::SUITES;
use crate::wire::Format;

/// Root systems, even Weyl groups, E-orbit functions and their transforms.
///
/// Weights and points are comma-separated ω-coordinates; every entry is an
/// exact rational written `p`, `p/q` or as a terminating decimal. JSON
/// outputs write rationals as `"p/q"` strings and floats with 17
/// significant digits. Set EORBIT_THREADS to cap the worker threads.
#[derive(Debug, Parser)]
#[command(name = "eorbit", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the Weyl group elements (matrices on ω-coordinates, determinants, words).
    Group(GroupArgs),
    /// Enumerate the W- or W_e-orbit of a weight.
    Orbit(OrbitArgs),
    /// Decompose a product of two W_e-orbits into W_e-orbits.
    Product(ProductArgs),
    /// Decompose a W_e-orbit into W_e-orbits of a subsystem.
    Branch(BranchArgs),
    /// Evaluate an orbit function at the points of a CSV file.
    Eval(EvalArgs),
    /// Enumerate the grid F_M (or F^e_M) or the torus points T_m.
    Grid(GridArgs),
    /// Finite E-orbit function transforms on T_m.
    #[command(subcommand)]
    Dft(DftCommand),
    /// Symmetric and alternating functions built from one-variable families.
    #[command(subcommand)]
    Symfunc(SymfuncCommand),
    /// Run the built-in property suites and print a pass/fail table.
    Verify(VerifyArgs),
}

/// A weight given on the command line as comma-separated rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightArg(pub Weight);

fn weight_arg(s: &str) -> Result<WeightArg, String> {
    parse_weight(s).map(WeightArg).map_err(|e| e.to_string())
}

/// Options shared by commands that work in one root system.
#[derive(Debug, Args)]
pub struct SystemArgs {
    /// Diagram name such as A2, B3, C4, D4, E6, F4 or G2.
    pub system: String,
}

/// Options shared by commands that depend on the even chamber.
#[derive(Debug, Args)]
pub struct ChamberArgs {
    /// 1-based index of the positive root α that splits the even chamber
    /// (default: the first simple root).
    #[arg(long, value_name = "INDEX")]
    pub split_root: Option<usize>,
}

/// Where and how a JSON-producing command writes its result.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output layout.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Emit JSON (the default layout; accepted for explicitness).
    #[arg(long, conflicts_with = "format")]
    pub json: bool,
    /// Output layout; `json` or `pretty` (the group has no CSV form).
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// The weight λ.
    #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
    pub lambda: WeightArg,
    /// Enumerate the W_e-orbit instead of the W-orbit.
    #[arg(long)]
    pub even: bool,
    #[command(flatten)]
    pub chamber: ChamberArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// The first weight λ.
    #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
    pub lambda: WeightArg,
    /// The second weight μ.
    #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
    pub mu: WeightArg,
    #[command(flatten)]
    pub chamber: ChamberArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// The weight λ.
    #[arg(value_parser = weight_arg, allow_hyphen_values = true)]
    pub lambda: WeightArg,
    /// Target subsystem name; without --roots the coordinate-drop rule is used
    /// (A_n → A_{n−1}, B_n → B_{n−1}, C_n → C_{n−1}, D_n → D_{n−1}).
    #[arg(long, value_name = "SYSTEM")]
    pub to: Option<String>,
    /// Simple roots of a full-rank subsystem in α-coordinates, separated by
    /// semicolons, e.g. `1,0;0,1`.
    #[arg(long, value_name = "ROOTS")]
    pub roots: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Function family: E, E-hat, C, C-hat or S.
    #[arg(long, default_value = "E")]
    pub family: String,
    /// The weight λ.
    #[arg(long, value_parser = weight_arg, allow_hyphen_values = true)]
    pub lambda: WeightArg,
    /// CSV of points in ω-coordinates, one per row (`-` for standard input).
    #[arg(long, value_name = "PATH")]
    pub points: PathBuf,
    /// Write the CSV to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub chamber: ChamberArgs,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Enumerate F_M (or F^e_M with --even).
    #[arg(long = "M", value_name = "M", required_unless_present = "torus", conflicts_with = "torus")]
    pub big_m: Option<u64>,
    /// Enumerate the torus points T_m instead.
    #[arg(long = "m", id = "torus", value_name = "m")]
    pub torus: Option<u64>,
    /// Enumerate F^e_M instead of F_M.
    #[arg(long, conflicts_with = "torus")]
    pub even: bool,
    /// Emit JSON (the default layout; accepted for explicitness).
    #[arg(long, conflicts_with = "format")]
    pub json: bool,
    /// Also write the points as CSV for external plotting.
    #[arg(long, value_name = "PATH")]
    pub dump_grid_csv: Option<PathBuf>,
    #[command(flatten)]
    pub chamber: ChamberArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Subcommand)]
pub enum DftCommand {
    /// Expansion coefficients of samples on T_m.
    Analyze(AnalyzeArgs),
    /// Evaluate an expansion at points or on T_m.
    Synthesize(SynthesizeArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Torus resolution m.
    #[arg(long = "m", value_name = "m")]
    pub m: u64,
    /// CSV of samples: ω-coordinates, then re, im; every point of T_m once.
    #[arg(long, value_name = "PATH")]
    pub samples: PathBuf,
    /// `auto`, or explicit weights separated by semicolons, e.g. `0,0;1,0`.
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub spectrum: String,
    #[command(flatten)]
    pub chamber: ChamberArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SynthesizeArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Coefficients as written by `dft analyze`.
    #[arg(long, value_name = "PATH")]
    pub coeffs: PathBuf,
    /// CSV of points in ω-coordinates (`-` for standard input).
    #[arg(long, value_name = "PATH", required_unless_present = "torus", conflicts_with = "torus")]
    pub points: Option<PathBuf>,
    /// Evaluate on every point of T_m instead.
    #[arg(long = "m", id = "torus", value_name = "m")]
    pub torus: Option<u64>,
    /// Write the CSV to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub chamber: ChamberArgs,
}

#[derive(Debug, Subcommand)]
pub enum SymfuncCommand {
    /// The symmetrized Hermite function Σ_{w even} Π_i H_{m_i}(λ_{w(i)}).
    Hermite(SymfuncArgs),
    /// The even-coset sum of orthonormal Hermite products.
    SymPoly(SymfuncArgs),
}

#[derive(Debug, Args)]
pub struct SymfuncArgs {
    /// Number of variables.
    #[arg(long)]
    pub n: usize,
    /// Degrees m_1,…,m_n.
    #[arg(long, value_delimiter = ',', required = true)]
    pub m: Vec<usize>,
    /// CSV of points, one per row (`-` for standard input).
    #[arg(long, value_name = "PATH")]
    pub points: PathBuf,
    /// Write the CSV to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only this suite (repeatable); all suites by default.
    #[arg(long, value_parser = SUITES)]
    pub suite: Vec<String>,
    /// List the suites and exit.
    #[arg(long)]
    pub list: bool,
}
