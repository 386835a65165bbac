use super::config::{DimensionlessConfig, Flavor, PhaseConfig};
use super::residual::{
    caputo_front_residual, caputo_front_residual_dim, neumann_residual, neumann_residual_dim,
    rl_front_residual, rl_front_residual_dim,
};
use crate::error::{domain, Error, Result};

/// Final bracket width of the bisection.
pub const BRACKET_TOL: f64 = 1e-13;
/// Residual magnitude required at the returned root.
pub const RESIDUAL_TOL: f64 = 1e-10;
const MAX_BISECTIONS: usize = 200;

/// Log-spaced scan used to bracket roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanWindow {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl Default for ScanWindow {
    fn default() -> Self {
        Self { lo: 1e-6, hi: 30.0, points: 128 }
    }
}

impl ScanWindow {
    fn validate(&self) -> Result<()> {
        if !(self.lo > 0.0 && self.hi > self.lo && self.hi.is_finite() && self.points >= 2) {
            return domain(format!("invalid scan window {self:?}"));
        }
        Ok(())
    }

    pub fn nodes(&self) -> Vec<f64> {
        let n = self.points - 1;
        let ratio = (self.hi / self.lo).ln();
        (0..=n)
            .map(|i| match i {
                0 => self.lo,
                i if i == n => self.hi,
                i => self.lo * (ratio * i as f64 / n as f64).exp(),
            })
            .collect()
    }
}

/// A positive root of a front equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontCoefficient {
    pub flavor: Flavor,
    pub value: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub residual: f64,
    pub iterations: usize,
    /// Sign changes seen in the scan window.
    pub roots_found: usize,
}

/// Residual of the reduced front equation of `flavor` at `x`.
pub fn front_residual(cfg: &DimensionlessConfig, flavor: Flavor, x: f64) -> Result<f64> {
    match flavor {
        Flavor::Caputo => caputo_front_residual(x, cfg),
        Flavor::Rl => rl_front_residual(x, cfg),
        Flavor::Classical => neumann_residual(x, cfg),
    }
}

/// Residual of the dimensional front equation of `flavor` at `x`.
pub fn front_residual_dim(p: &PhaseConfig, flavor: Flavor, x: f64) -> Result<f64> {
    match flavor {
        Flavor::Caputo => caputo_front_residual_dim(x, p),
        Flavor::Rl => rl_front_residual_dim(x, p),
        Flavor::Classical => neumann_residual_dim(x, p),
    }
}

/// Smallest positive root of the reduced front equation in the default window.
pub fn solve_front(cfg: &DimensionlessConfig, flavor: Flavor) -> Result<FrontCoefficient> {
    solve_front_in(cfg, flavor, &ScanWindow::default())
}

pub fn solve_front_in(
    cfg: &DimensionlessConfig,
    flavor: Flavor,
    window: &ScanWindow,
) -> Result<FrontCoefficient> {
    cfg.validate()?;
    find_root(|x| front_residual(cfg, flavor, x), flavor, window)
}

/// Same as [`solve_front`] on the dimensional equation of `p`.
pub fn solve_front_dim(p: &PhaseConfig, flavor: Flavor) -> Result<FrontCoefficient> {
    find_root(|x| front_residual_dim(p, flavor, x), flavor, &ScanWindow::default())
}

/// Residual samples on the scan nodes, as `(x, residual)` pairs.
pub fn scan_residual(
    cfg: &DimensionlessConfig,
    flavor: Flavor,
    window: &ScanWindow,
) -> Result<Vec<(f64, f64)>> {
    window.validate()?;
    window
        .nodes()
        .into_iter()
        .map(|x| Ok((x, front_residual(cfg, flavor, x)?)))
        .collect()
}

fn find_root(
    f: impl Fn(f64) -> Result<f64>,
    flavor: Flavor,
    window: &ScanWindow,
) -> Result<FrontCoefficient> {
    window.validate()?;
    let xs = window.nodes();
    let fs = xs.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;

    let mut first = None;
    let mut changes = 0;
    for i in 0..xs.len() - 1 {
        if fs[i] == 0.0 {
            // exact hit on a node counts once
            changes += 1;
            first.get_or_insert((i, i));
        } else if fs[i] * fs[i + 1] < 0.0 {
            changes += 1;
            first.get_or_insert((i, i + 1));
        }
    }
    let (i, j) = first.ok_or(Error::NoRoot {
        flavor: flavor.as_str(),
        lo: window.lo,
        hi: window.hi,
    })?;
    if i == j {
        return Ok(FrontCoefficient {
            flavor,
            value: xs[i],
            bracket_lo: xs[i],
            bracket_hi: xs[i],
            residual: 0.0,
            iterations: 0,
            roots_found: changes,
        });
    }

    let (mut lo, mut hi) = (xs[i], xs[j]);
    let f_lo_positive = fs[i] > 0.0;
    let mut mid = 0.5 * (lo + hi);
    let mut f_mid = f(mid)?;
    let mut iterations = 1;
    while (hi - lo > BRACKET_TOL || f_mid.abs() > RESIDUAL_TOL) && iterations < MAX_BISECTIONS {
        if f_mid == 0.0 {
            break;
        }
        if (f_mid > 0.0) == f_lo_positive {
            lo = mid;
        } else {
            hi = mid;
        }
        let next = 0.5 * (lo + hi);
        if next <= lo || next >= hi {
            break;
        }
        mid = next;
        f_mid = f(mid)?;
        iterations += 1;
    }
    Ok(FrontCoefficient {
        flavor,
        value: mid,
        bracket_lo: lo.min(mid),
        bracket_hi: hi.max(mid),
        residual: f_mid,
        iterations,
        roots_found: changes,
    })
}
