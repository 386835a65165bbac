use thiserror::Error;

/// Errors produced by the numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series for W({x}; {rho}; {beta}) did not converge within {terms} terms")]
    NonConvergence { x: f64, rho: f64, beta: f64, terms: usize },

    #[error("degenerate quotient: {0}")]
    Degenerate(String),

    #[error("grid error: {0}")]
    Grid(String),

    #[error("no sign change of the {flavor} front residual in [{lo}, {hi}]")]
    NoRoot { flavor: &'static str, lo: f64, hi: f64 },

    #[error("point (x = {x}, t = {t}) is not inside phase {phase} (front at {front})")]
    Region { x: f64, t: f64, phase: u8, front: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
