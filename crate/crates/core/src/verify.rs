//! Independent checks of the explicit solutions: quadrature residuals of the
//! governing equations, the latent-heat balance at the front in closed form,
//! the two non-interchangeable flux limits, and sweeps over the order.

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::fraccalc::{caputo_derivative_num, rl_derivative_num, SampledFn};
use crate::specialfn::{erf, erfc, gamma, mainardi, wright, WrightArgs};
use crate::stefan::{
    solve_front, DimensionlessConfig, Flavor, FrontCoefficient, PhaseConstants, SolutionTriple,
};

/// Default number of time nodes of the quadrature oracle.
pub const DEFAULT_GRID: usize = 1 << 11;

/// Residuals of the governing equation at a set of `(x, t)` points.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub points: Vec<(f64, f64)>,
    pub residuals: Vec<f64>,
    pub norm_inf: f64,
    /// Time nodes of the quadrature grid; 0 when no quadrature was needed.
    pub grid_resolution: usize,
}

/// Knobs of [`pde_residual_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PdeOptions {
    /// Time nodes of the quadrature grid.
    pub grid: usize,
    /// Step of the spatial second difference, relative to `lam t^(alpha/2)`.
    pub fd_step: f64,
    /// Nodes sit at `t (j/m)^grading`, clustering near 0 where the
    /// solution has a boundary layer of width `(x/lam)^(2/alpha)`.
    pub grading: f64,
}

impl Default for PdeOptions {
    fn default() -> Self {
        Self { grid: DEFAULT_GRID, fd_step: 5e-3, grading: 2.0 }
    }
}

/// Smallest time at which residuals are evaluated.
pub const MIN_TIME: f64 = 0.05;

fn check_phase(phase: u8) -> Result<()> {
    if phase != 1 && phase != 2 {
        return domain(format!("phase must be 1 or 2, got {phase}"));
    }
    Ok(())
}

/// Span used to place default points: `(0, s)` for the liquid, and
/// `(s, s + 4 lam_a1 t^(alpha/2))` for the solid.
fn phase_span(sol: &SolutionTriple, phase: u8, t: f64) -> Result<(f64, f64)> {
    let s = sol.front(t)?;
    Ok(match phase {
        2 => (0.0, s),
        _ => {
            let k = sol.constants();
            (s, s + 4.0 * k.lam_a1 * t.powf(k.alpha / 2.0))
        }
    })
}

/// Three relative positions of the phase span at three times.
pub fn default_points(sol: &SolutionTriple, phase: u8) -> Result<Vec<(f64, f64)>> {
    check_phase(phase)?;
    let mut out = Vec::with_capacity(9);
    for t in [0.5, 1.0, 2.0] {
        let (a, b) = phase_span(sol, phase, t)?;
        for f in [0.25, 0.5, 0.75] {
            out.push((a + f * (b - a), t));
        }
    }
    Ok(out)
}

/// Five-point central second difference.
fn second_difference(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let d = -f(x - 2.0 * h)? + 16.0 * f(x - h)? - 30.0 * f(x)? + 16.0 * f(x + h)?
        - f(x + 2.0 * h)?;
    Ok(d / (12.0 * h * h))
}

/// Five-point central first difference.
fn first_difference(f: impl Fn(f64) -> Result<f64>, x: f64, h: f64) -> Result<f64> {
    let d = f(x - 2.0 * h)? - 8.0 * f(x - h)? + 8.0 * f(x + h)? - f(x + 2.0 * h)?;
    Ok(d / (12.0 * h))
}

/// Phase formula, extended to `t = 0` by its limit.
struct PhaseField<'a> {
    sol: &'a SolutionTriple,
    phase: u8,
    at_zero: f64,
}

impl<'a> PhaseField<'a> {
    fn new(sol: &'a SolutionTriple, phase: u8) -> Result<Self> {
        let k = sol.constants();
        let at_zero = match phase {
            1 => k.u_i,
            _ => k.u_0 + flux_scales(sol)?.1,
        };
        Ok(Self { sol, phase, at_zero })
    }

    fn u(&self, x: f64, t: f64) -> Result<f64> {
        if t == 0.0 {
            return Ok(self.at_zero);
        }
        match self.phase {
            1 => self.sol.u1(x, t),
            _ => self.sol.u2(x, t),
        }
    }

    fn u_xx(&self, x: f64, t: f64, step: f64) -> Result<f64> {
        if t == 0.0 {
            return Ok(0.0);
        }
        let k = self.sol.constants();
        let lam = if self.phase == 1 { k.lam_a1 } else { k.lam_a2 };
        let h = (step * lam * t.powf(k.alpha / 2.0)).min(x / 4.0);
        second_difference(|y| self.u(y, t), x, h)
    }
}

/// Residual of the governing equation of `phase` at the default points.
pub fn pde_residual(sol: &SolutionTriple, phase: u8) -> Result<ResidualReport> {
    let points = default_points(sol, phase)?;
    pde_residual_with(sol, phase, &points, PdeOptions::default())
}

/// Residual of the governing equation of `phase` at `points`.
///
/// Caputo: `D^alpha_t u - lam^2 u_xx`, the derivative by product quadrature
/// in time. Riemann-Liouville: `u_t - lam^2 D^(1-alpha)_t u_xx`, with the
/// fractional derivative of the sampled `u_xx` by quadrature. Classical:
/// `u_t - lam^2 u_xx`. All `x` derivatives are finite differences.
pub fn pde_residual_with(
    sol: &SolutionTriple,
    phase: u8,
    points: &[(f64, f64)],
    opts: PdeOptions,
) -> Result<ResidualReport> {
    Ok(residual_levels(sol, phase, points, opts, false)?.remove(0))
}

/// Residuals on `opts.grid` and on the grid with twice as many intervals.
/// The coarse nodes are a subset of the fine ones and share their samples.
pub fn pde_convergence(
    sol: &SolutionTriple,
    phase: u8,
    points: &[(f64, f64)],
    opts: PdeOptions,
) -> Result<(ResidualReport, ResidualReport)> {
    let mut v = residual_levels(sol, phase, points, opts, true)?;
    let fine = v.pop().unwrap();
    Ok((v.pop().unwrap(), fine))
}

fn residual_levels(
    sol: &SolutionTriple,
    phase: u8,
    points: &[(f64, f64)],
    opts: PdeOptions,
    doubled: bool,
) -> Result<Vec<ResidualReport>> {
    check_phase(phase)?;
    if opts.grid < 32 {
        return Err(Error::Grid(format!("need at least 32 time nodes, got {}", opts.grid)));
    }
    if !(opts.fd_step > 0.0 && opts.grading >= 1.0) {
        return domain(format!("invalid residual options {opts:?}"));
    }
    for &(x, t) in points {
        if !(t >= MIN_TIME && t.is_finite()) {
            return domain(format!("residual points need t >= {MIN_TIME}, got {t}"));
        }
        let s = sol.front(t)?;
        let inside = match phase {
            1 => x > s,
            _ => x > 0.0 && x < s,
        };
        if !inside || !x.is_finite() {
            return Err(Error::Region { x, t, phase, front: s });
        }
    }
    let field = PhaseField::new(sol, phase)?;
    let k = sol.constants();
    let lam = if phase == 1 { k.lam_a1 } else { k.lam_a2 };
    let lam2 = lam * lam;
    let flavor = sol.flavor();
    // intervals on [0, t]; the rl stencil needs two more nodes past t
    let (m, extra) = match flavor {
        Flavor::Rl => (opts.grid - 3, 2),
        _ => (opts.grid - 1, 0),
    };
    let levels: &[usize] = if doubled { &[1, 2] } else { &[1] };
    let finest = m * levels[levels.len() - 1];

    let per_point = points
        .par_iter()
        .map(|&(x, t)| -> Result<Vec<f64>> {
            let u_xx = |tau: f64| field.u_xx(x, tau, opts.fd_step);
            let u = |tau: f64| field.u(x, tau);
            if flavor == Flavor::Classical {
                let u_t = first_difference(u, t, 1e-3 * t)?;
                return Ok(vec![u_t - lam2 * u_xx(t)?; levels.len()]);
            }
            let g = |tau: f64| if flavor == Flavor::Rl { u_xx(tau) } else { u(tau) };
            let fine_grid = graded(t, finest, opts.grading, 0);
            let fine = fine_grid.iter().map(|&tau| g(tau)).collect::<Result<Vec<_>>>()?;
            let u_t = match flavor {
                Flavor::Rl => first_difference(u, t, 1e-3 * t)?,
                _ => 0.0,
            };
            levels
                .iter()
                .map(|&level| {
                    let stride = levels[levels.len() - 1] / level;
                    let grid = graded(t, m * level, opts.grading, extra);
                    let mut values: Vec<f64> = fine.iter().step_by(stride).copied().collect();
                    for &tau in &grid[values.len()..] {
                        values.push(g(tau)?);
                    }
                    let f = SampledFn::new(grid, values)?;
                    Ok(match flavor {
                        Flavor::Rl => u_t - lam2 * rl_derivative_num(&f, 1.0 - k.alpha, t)?,
                        _ => caputo_derivative_num(&f, k.alpha, t)? - lam2 * u_xx(t)?,
                    })
                })
                .collect()
        })
        .collect::<Result<Vec<_>>>()?;

    levels
        .iter()
        .enumerate()
        .map(|(i, &level)| {
            let residuals: Vec<f64> = per_point.iter().map(|r| r[i]).collect();
            if let Some(j) = residuals.iter().position(|r| !r.is_finite()) {
                return domain(format!("non-finite residual at {:?}", points[j]));
            }
            let norm_inf = residuals.iter().fold(0.0_f64, |a, r| a.max(r.abs()));
            Ok(ResidualReport {
                points: points.to_vec(),
                residuals,
                norm_inf,
                grid_resolution: match flavor {
                    Flavor::Classical => 0,
                    _ => m * level + 1 + extra,
                },
            })
        })
        .collect()
}

/// `m + 1` nodes `t (j/m)^p` on `[0, t]`, followed by `extra` nodes
/// continuing with the last spacing.
fn graded(t: f64, m: usize, p: f64, extra: usize) -> Vec<f64> {
    let mut g: Vec<f64> = (0..=m).map(|j| t * (j as f64 / m as f64).powf(p)).collect();
    g[m] = t;
    let h = t - g[m - 1];
    g.extend((1..=extra).map(|k| t + k as f64 * h));
    g
}

fn sample(f: impl Fn(f64) -> Result<f64>, grid: &[f64]) -> Result<SampledFn> {
    let values = grid.iter().map(|&t| f(t)).collect::<Result<Vec<_>>>()?;
    SampledFn::new(grid.to_vec(), values)
}

/// `(B1, B2)` with `u1 = U_i - B1 W(-x/(lam_a1 t^r))` and
/// `u2 = U_0 + B2 (1 - W(-x/(lam_a2 t^r)))`; erfc/erf shapes when classical.
fn flux_scales(sol: &SolutionTriple) -> Result<(f64, f64)> {
    let k = sol.constants();
    let c = sol.coefficient().value;
    let lt = k.lam_a1 / k.lam_a2;
    let (w1, w2) = match sol.flavor() {
        Flavor::Classical => (erfc(c), erf(c * lt)),
        _ => {
            let r = k.alpha / 2.0;
            let w = |x: f64| wright(WrightArgs::new(-x, -r, 1.0));
            (w(2.0 * c)?, 1.0 - w(2.0 * c * lt)?)
        }
    };
    Ok((-(k.u_m - k.u_i) / w1, -(k.u_0 - k.u_m) / w2))
}

/// Signed latent-heat balance at `t = 1`, `rho l (d s) - (k1 q1 - k2 q2)`,
/// divided by `rho l lam_a1`. Every term is evaluated in closed form.
pub fn stefan_condition_residual(sol: &SolutionTriple) -> Result<f64> {
    let k: &PhaseConstants = sol.constants();
    let c = sol.coefficient().value;
    let (b1, b2) = flux_scales(sol)?;
    let z1 = 2.0 * c;
    let z2 = 2.0 * c * k.lam_a1 / k.lam_a2;
    let (lhs, q1, q2) = match sol.flavor() {
        Flavor::Classical => {
            let g = |z: f64| (-z * z / 4.0).exp() / std::f64::consts::PI.sqrt();
            (k.rho_l * c * k.lam_a1, b1 / k.lam_a1 * g(z1), b2 / k.lam_a2 * g(z2))
        }
        Flavor::Caputo => {
            let r = k.alpha / 2.0;
            let lhs = k.rho_l * 2.0 * c * k.lam_a1 * gamma(1.0 + r)? / gamma(1.0 - r)?;
            (lhs, b1 / k.lam_a1 * mainardi(z1, r)?, b2 / k.lam_a2 * mainardi(z2, r)?)
        }
        Flavor::Rl => {
            // D^(1-alpha) of the x-flux at the front, expanded by the
            // three-term recurrence into W(.; 1 + r) and z W(.; 1)
            let r = k.alpha / 2.0;
            let trace = |z: f64| -> Result<f64> {
                let a = wright(WrightArgs::new(-z, -r, 1.0 + r))?;
                let b = wright(WrightArgs::new(-z, -r, 1.0))?;
                Ok(r * (a + z * b))
            };
            let lhs = k.rho_l * 2.0 * c * k.lam_a1 * r;
            (lhs, b1 / k.lam_a1 * trace(z1)?, b2 / k.lam_a2 * trace(z2)?)
        }
    };
    // fluxes carry the sign of x-derivatives: u1_x = q1, u2_x = q2
    Ok((lhs - (k.k_a1 * q1 - k.k_a2 * q2)) / (k.rho_l * k.lam_a1))
}

/// The two candidate values of the solid-side flux term at the front:
/// the derivative taken along the front position and then evaluated there,
/// against the derivative of the flux frozen at the front position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitInterchange {
    /// Limit of the fractional derivative of `u1_x` as `x` tends to the front.
    pub derivative_first: f64,
    /// Fractional derivative of the frozen front flux.
    pub limit_first: f64,
}

impl LimitInterchange {
    pub fn gap(&self) -> f64 {
        (self.derivative_first - self.limit_first).abs()
    }

    pub fn relative_gap(&self) -> f64 {
        self.gap() / self.derivative_first.abs().max(self.limit_first.abs())
    }
}

fn check_interchange(cfg: &DimensionlessConfig, coef: &FrontCoefficient, t: f64) -> Result<()> {
    cfg.validate()?;
    if coef.flavor != Flavor::Rl {
        return domain(format!("limit interchange needs an rl coefficient, got {}", coef.flavor));
    }
    if !(cfg.alpha < 1.0) {
        return domain(format!("limit interchange needs alpha < 1, got {}", cfg.alpha));
    }
    if !(t > 0.0 && t.is_finite()) {
        return domain(format!("need t > 0, got {t}"));
    }
    Ok(())
}

/// Both values, in reduced units (`lam_a1 = 1`).
pub fn limit_interchange_gap(
    cfg: &DimensionlessConfig,
    coef: &FrontCoefficient,
    t: f64,
) -> Result<LimitInterchange> {
    check_interchange(cfg, coef, t)?;
    let r = cfg.alpha / 2.0;
    let z = 2.0 * coef.value;
    let b1 = -1.0 / wright(WrightArgs::new(-z, -r, 1.0))?;
    let common = b1 * t.powf(r - 1.0);
    Ok(LimitInterchange {
        derivative_first: common * wright(WrightArgs::new(-z, -r, r))?,
        limit_first: common * gamma(1.0 - r)? / gamma(r)? * mainardi(z, r)?,
    })
}

/// Quadrature evaluation of the derivative-first value: the
/// Riemann-Liouville derivative of order `1 - alpha` of `u1_x` sampled at the
/// front position `s(t)` on `grid` nodes, `u1_x` by central differences.
pub fn limit_interchange_trace(
    cfg: &DimensionlessConfig,
    coef: &FrontCoefficient,
    t: f64,
    grid: usize,
) -> Result<f64> {
    check_interchange(cfg, coef, t)?;
    if grid < 32 {
        return Err(Error::Grid(format!("need at least 32 time nodes, got {grid}")));
    }
    let sol = SolutionTriple::rl(cfg, *coef)?;
    let x = sol.front(t)?;
    let u_x = |tau: f64| -> Result<f64> {
        if tau == 0.0 {
            return Ok(0.0);
        }
        let h = 5e-3 * tau.powf(cfg.alpha / 2.0);
        first_difference(|y| sol.u1(y, tau), x, h.min(x / 4.0))
    };
    let f = sample(u_x, &graded(t, grid - 3, 2.0, 2))?;
    rl_derivative_num(&f, 1.0 - cfg.alpha, t)
}

/// `Gamma(r) W(-x; -r; r) - Gamma(1 - r) M_r(x)` with `r = alpha/2`.
pub fn h_alpha(x: f64, alpha: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) {
        return domain(format!("h_alpha needs x > 0, got {x}"));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return domain(format!("alpha must lie in (0, 1], got {alpha}"));
    }
    let r = alpha / 2.0;
    Ok(gamma(r)? * wright(WrightArgs::new(-x, -r, r))? - gamma(1.0 - r)? * mainardi(x, r)?)
}

/// One row of an order sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub alpha: f64,
    pub xi: f64,
    pub eta: f64,
    pub eta_classical: f64,
    /// First error met in this row, if any; the failed values are NaN.
    pub error: Option<Error>,
}

impl SweepRow {
    pub fn failed(&self) -> bool {
        self.error.is_some()
    }

    pub fn gap_xi_eta(&self) -> f64 {
        (self.xi - self.eta).abs()
    }

    pub fn gap_eta_classical(&self) -> f64 {
        (self.eta - self.eta_classical).abs()
    }
}

/// Caputo and Riemann-Liouville coefficients of `base` at each order, next to
/// the classical coefficient. Rows are sorted by `alpha`; a failed solve
/// marks its row instead of aborting the sweep.
pub fn alpha_sweep(base: &DimensionlessConfig, alphas: &[f64]) -> Result<Vec<SweepRow>> {
    base.validate()?;
    if let Some(a) = alphas.iter().find(|a| !(**a > 0.0 && **a < 1.0)) {
        return domain(format!("sweep orders must lie in (0, 1), got {a}"));
    }
    let classical = solve_front(&base.with_alpha(1.0)?, Flavor::Classical);
    let mut sorted = alphas.to_vec();
    sorted.sort_by(f64::total_cmp);

    Ok(sorted
        .par_iter()
        .map(|&alpha| {
            let mut error = None;
            let mut get = |r: Result<FrontCoefficient>| match r {
                Ok(c) => c.value,
                Err(e) => {
                    error.get_or_insert(e);
                    f64::NAN
                }
            };
            let eta_classical = get(classical.clone());
            let (xi, eta) = match base.with_alpha(alpha) {
                Ok(cfg) => (
                    get(solve_front(&cfg, Flavor::Caputo)),
                    get(solve_front(&cfg, Flavor::Rl)),
                ),
                Err(e) => (get(Err(e.clone())), get(Err(e))),
            };
            SweepRow { alpha, xi, eta, eta_classical, error }
        })
        .collect())
}
