//! Command-line front end: argument parsing, config merging and the
//! CSV/JSON writers behind the `fracstefan` binary.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod format;

pub use args::{Cli, Command};
pub use config::{RunConfig, Tolerances};
pub use error::CliError;

/// Environment variable capping the worker threads.
pub const THREADS_VAR: &str = "FRACSTEFAN_THREADS";

/// Applies the thread cap from [`THREADS_VAR`], if set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Config(format!("{THREADS_VAR} must be a positive integer, got '{v}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Config(e.to_string()))
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let file = RunConfig::load_opt(cli.config.as_deref())?;
    match &cli.command {
        Command::Wright(c) => commands::wright_cmd(c, &file),
        Command::Solve(c) => commands::solve_cmd(c, &file),
        Command::Sweep(c) => commands::sweep_cmd(c, &file),
        Command::Field(c) => commands::field_cmd(c, &file),
        Command::Verify(c) => commands::verify_cmd(c, &file),
    }
}
