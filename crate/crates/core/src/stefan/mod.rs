//! Two-phase fractional Stefan-like problems: configuration, front equations,
//! root finding and the explicit similarity solutions.

mod config;
mod residual;
mod solution;
mod solve;

pub use config::{DimensionlessConfig, Flavor, PhaseConfig, PhaseInputs};
pub use residual::{
    caputo_front_residual, caputo_front_residual_dim, f1, f2, g1, g2, neumann_residual,
    neumann_residual_dim, rl_front_residual, rl_front_residual_dim, rl_front_residual_g,
};
pub use solution::{Origin, PhaseConstants, SolutionTriple};
pub use solve::{
    front_residual, front_residual_dim, scan_residual, solve_front, solve_front_dim,
    solve_front_in, FrontCoefficient, ScanWindow, BRACKET_TOL, RESIDUAL_TOL,
};
