use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use fracstefan_core::Flavor;

/// Explicit similarity solutions of two-phase fractional Stefan-like problems.
#[derive(Debug, Parser)]
#[command(name = "fracstefan", version, about)]
pub struct Cli {
    /// JSON config file; flags given on the command line take precedence.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the Wright function W(x; rho; beta), or tabulate it over x.
    Wright(WrightCmd),
    /// Find the front coefficient of one flavor.
    Solve(SolveCmd),
    /// Caputo, Riemann-Liouville and classical coefficients over a list of orders.
    Sweep(SweepCmd),
    /// Sample the dimensionless temperature on a (y, tau) grid.
    Field(FieldCmd),
    /// Check a solution against its governing equations.
    Verify(VerifyCmd),
}

/// Problem parameters: a preset, optionally overridden field by field.
#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// One of test1, test2, test3, test4.
    #[arg(long)]
    pub preset: Option<String>,
    /// Diffusivity ratio lambda_1 / lambda_2.
    #[arg(long)]
    pub lam: Option<f64>,
    /// Conductivity ratio k_2 / k_1.
    #[arg(long)]
    pub k_ratio: Option<f64>,
    /// Scaled boundary temperature.
    #[arg(long)]
    pub u: Option<f64>,
    /// Stefan number.
    #[arg(long)]
    pub ste: Option<f64>,
}

#[derive(Debug, Args)]
pub struct WrightCmd {
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["from", "to"])]
    pub x: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub rho: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    /// Start of the tabulated range.
    #[arg(long, allow_negative_numbers = true, requires = "to")]
    pub from: Option<f64>,
    /// End of the tabulated range.
    #[arg(long, allow_negative_numbers = true, requires = "from")]
    pub to: Option<f64>,
    /// Number of equally spaced rows in table mode.
    #[arg(long, default_value_t = 101)]
    pub rows: usize,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SolveCmd {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub flavor: Option<Flavor>,
    #[arg(long)]
    pub scan_lo: Option<f64>,
    #[arg(long)]
    pub scan_hi: Option<f64>,
    #[arg(long)]
    pub scan_points: Option<usize>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepCmd {
    #[command(flatten)]
    pub model: ModelArgs,
    /// Comma-separated orders in (0, 1); defaults to 0.05, 0.10, ..., 0.95, 0.99.
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FieldCmd {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub flavor: Option<Flavor>,
    /// Samples in y, including both ends of [0, y_max].
    #[arg(long)]
    pub nx: Option<usize>,
    /// Samples in tau, at t_max / nt, 2 t_max / nt, ..., t_max.
    #[arg(long)]
    pub nt: Option<usize>,
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub y_max: Option<f64>,
    /// Grid CSV (`y,tau,u`); stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Front CSV (`tau,front`).
    #[arg(long)]
    pub front_output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyCmd {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub flavor: Option<Flavor>,
    /// Time nodes of the quadrature grid.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Use a deliberately coarse uniform grid (a failing run, for testing).
    #[arg(long)]
    pub coarse: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}
