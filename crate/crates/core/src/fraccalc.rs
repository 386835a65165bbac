//! Riemann-Liouville and Caputo operators.
//!
//! Closed-form power rules are provided next to product-integration
//! quadratures on sampled data. The quadratures integrate the weakly singular
//! kernel exactly against a piecewise polynomial interpolant of the samples,
//! and are meant as independent reference evaluators rather than solvers.

use crate::error::{domain, Error, Result};
use crate::specialfn::{gamma, mittag_leffler, rgamma, wright, WrightArgs};

/// Samples of a function of time on a strictly increasing grid starting at 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFn {
    t_grid: Vec<f64>,
    values: Vec<f64>,
}

impl SampledFn {
    pub fn new(t_grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if t_grid.len() != values.len() {
            return Err(Error::Grid(format!(
                "{} nodes but {} values",
                t_grid.len(),
                values.len()
            )));
        }
        if t_grid.len() < 3 {
            return Err(Error::Grid("at least 3 nodes are required".into()));
        }
        if t_grid[0] != 0.0 {
            return Err(Error::Grid(format!("grid must start at 0, got {}", t_grid[0])));
        }
        if t_grid.windows(2).any(|w| !(w[1] > w[0]) || !w[1].is_finite()) {
            return Err(Error::Grid("grid must be finite and strictly increasing".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Grid(format!("non-finite sample at node {i}")));
        }
        Ok(Self { t_grid, values })
    }

    /// Samples `f` on `n_intervals + 1` uniform nodes of `[0, t_max]`.
    pub fn uniform(mut f: impl FnMut(f64) -> f64, t_max: f64, n_intervals: usize) -> Result<Self> {
        if !(t_max > 0.0 && t_max.is_finite()) {
            return Err(Error::Grid(format!("t_max must be positive, got {t_max}")));
        }
        let h = t_max / n_intervals as f64;
        let mut t_grid: Vec<f64> = (0..=n_intervals).map(|j| j as f64 * h).collect();
        t_grid[n_intervals] = t_max;
        let values = t_grid.iter().map(|&t| f(t)).collect();
        Self::new(t_grid, values)
    }

    pub fn t_grid(&self) -> &[f64] {
        &self.t_grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn t_max(&self) -> f64 {
        *self.t_grid.last().unwrap()
    }

    fn check_t(&self, t: f64) -> Result<()> {
        if !(t > 0.0 && t <= self.t_max()) {
            return Err(Error::Grid(format!(
                "t = {t} outside (0, {}]",
                self.t_max()
            )));
        }
        Ok(())
    }

    /// Index `j` of the interval `[t_j, t_{j+1}]` that contains `t > 0`.
    fn interval_of(&self, t: f64) -> usize {
        let j = self.t_grid.partition_point(|&s| s < t);
        j.saturating_sub(1).min(self.t_grid.len() - 2)
    }
}

/// `A^q - B^q` for `A = B + d >= B >= 0`, without cancellation when `d << A`.
fn pow_diff(a: f64, d: f64, q: f64) -> f64 {
    if d >= a {
        return a.powf(q);
    }
    -a.powf(q) * (q * (-d / a).ln_1p()).exp_m1()
}

/// Moments `(int K, int (tau - lo) K)` over `[lo, lo + d]` of the kernel
/// `K(tau) = (t - tau)^(p-1)`, with `a = t - lo`.
fn kernel_moments(a: f64, d: f64, p: f64) -> (f64, f64) {
    let m0 = pow_diff(a, d, p) / p;
    let m1 = a * m0 - pow_diff(a, d, p + 1.0) / (p + 1.0);
    (m0, m1)
}

/// `I^alpha (t - a)^beta = Gamma(beta+1)/Gamma(beta+alpha+1) (t - a)^(beta+alpha)`.
pub fn rl_integral_power(a: f64, alpha: f64, beta: f64, t: f64) -> Result<f64> {
    if !(beta > -1.0) {
        return domain(format!("power rule needs beta > -1, got {beta}"));
    }
    if !(alpha > 0.0) {
        return domain(format!("integral order must be positive, got {alpha}"));
    }
    if !(t > a) {
        return domain(format!("need t > a, got t = {t}, a = {a}"));
    }
    Ok(gamma(beta + 1.0)? * rgamma(beta + alpha + 1.0) * (t - a).powf(beta + alpha))
}

/// `D^alpha (t - a)^beta`; exactly zero when `beta = alpha - 1`.
pub fn rl_derivative_power(a: f64, alpha: f64, beta: f64, t: f64) -> Result<f64> {
    if !(beta > -1.0) {
        return domain(format!("power rule needs beta > -1, got {beta}"));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return domain(format!("derivative order must lie in (0, 1), got {alpha}"));
    }
    if !(t > a) {
        return domain(format!("need t > a, got t = {t}, a = {a}"));
    }
    if beta == alpha - 1.0 {
        return Ok(0.0);
    }
    Ok(gamma(beta + 1.0)? * rgamma(beta - alpha + 1.0) * (t - a).powf(beta - alpha))
}

/// Riemann-Liouville integral `I^alpha f (t)` by product trapezoid: the samples
/// are interpolated linearly and the kernel integrated exactly.
pub fn rl_integral_num(f: &SampledFn, alpha: f64, t: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return domain(format!("integral order must be positive, got {alpha}"));
    }
    f.check_t(t)?;
    let (tg, v) = (&f.t_grid, &f.values);
    let last = f.interval_of(t);
    let mut acc = 0.0;
    for j in 0..=last {
        let lo = tg[j];
        let len = tg[j + 1] - lo;
        let slope = (v[j + 1] - v[j]) / len;
        let d = if j == last { t - lo } else { len };
        let (m0, m1) = kernel_moments(t - lo, d, alpha);
        acc += v[j] * m0 + slope * m1;
    }
    Ok(acc * rgamma(alpha))
}

/// Caputo derivative of order `alpha` in (0, 1) by the L1-2 scheme: linear
/// interpolation on the first interval and quadratic interpolation through
/// three consecutive nodes after that, each differentiated and integrated
/// exactly against `(t - tau)^(-alpha)`.
pub fn caputo_derivative_num(f: &SampledFn, alpha: f64, t: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return domain(format!("derivative order must lie in (0, 1), got {alpha}"));
    }
    f.check_t(t)?;
    let (tg, v) = (&f.t_grid, &f.values);
    let p = 1.0 - alpha;
    let last = f.interval_of(t);
    let mut acc = 0.0;
    for j in 0..=last {
        let lo = tg[j];
        let len = tg[j + 1] - lo;
        let d2 = (v[j + 1] - v[j]) / len;
        let d = if j == last { t - lo } else { len };
        if j == 0 {
            acc += d2 * pow_diff(t, d, p) / p;
            continue;
        }
        let d1 = (v[j] - v[j - 1]) / (lo - tg[j - 1]);
        let c = (d2 - d1) / (tg[j + 1] - tg[j - 1]);
        let (m0, m1) = kernel_moments(t - lo, d, p);
        acc += (d2 - c * len) * m0 + 2.0 * c * m1;
    }
    Ok(acc * rgamma(p))
}

/// Riemann-Liouville derivative of order `mu` in (0, 1): the order `1 - mu`
/// integral differentiated by a five-point central difference whose step is
/// the local grid spacing. Needs `t >= 10 h` and `t + 2h` inside the grid.
pub fn rl_derivative_num(f: &SampledFn, mu: f64, t: f64) -> Result<f64> {
    if !(mu > 0.0 && mu < 1.0) {
        return domain(format!("derivative order must lie in (0, 1), got {mu}"));
    }
    f.check_t(t)?;
    let j = f.interval_of(t);
    let h = f.t_grid[j + 1] - f.t_grid[j];
    if t < 10.0 * h || t + 2.0 * h > f.t_max() * (1.0 + 1e-12) {
        return Err(Error::Grid(format!(
            "t = {t} too close to the grid ends for a stencil of step {h}"
        )));
    }
    let i = |s: f64| rl_integral_num(f, 1.0 - mu, s.min(f.t_max()));
    let d = -i(t + 2.0 * h)? + 8.0 * i(t + h)? - 8.0 * i(t - h)? + i(t - 2.0 * h)?;
    Ok(d / (12.0 * h))
}

/// Closed form of `I^alpha [tau^(beta-1) W(-c tau^(-rho); -rho; beta)](t)`,
/// which equals `t^(beta+alpha-1) W(-c t^(-rho); -rho; beta+alpha)`.
pub fn wright_ialpha_map(c: f64, rho: f64, beta: f64, alpha: f64, t: f64) -> Result<f64> {
    if !(c > 0.0 && t > 0.0) {
        return domain(format!("need c > 0 and t > 0, got c = {c}, t = {t}"));
    }
    if !(rho > 0.0 && rho < 1.0) {
        return domain(format!("need 0 < rho < 1, got {rho}"));
    }
    let w = wright(WrightArgs::new(-c * t.powf(-rho), -rho, beta + alpha))?;
    Ok(t.powf(beta + alpha - 1.0) * w)
}

/// Explicit solutions of `D^alpha_t u = u_xx` used to probe the condition
/// `lim_{t -> 0} I^alpha u_xx (x, t) = 0` under which the Caputo and
/// Riemann-Liouville forms of the equation agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// `x^2 + 2 t^alpha / Gamma(alpha + 1)`
    Polynomial,
    /// `E_alpha(t^alpha) exp(-x)`
    MittagLeffler,
    /// `W(-x / t^(alpha/2); -alpha/2; 1)`
    Wright,
}

impl Witness {
    pub const ALL: [Witness; 3] = [Witness::Polynomial, Witness::MittagLeffler, Witness::Wright];

    pub fn value(self, x: f64, t: f64, alpha: f64) -> Result<f64> {
        match self {
            Witness::Polynomial => Ok(x * x + 2.0 * t.powf(alpha) * rgamma(alpha + 1.0)),
            Witness::MittagLeffler => Ok(mittag_leffler(alpha, t.powf(alpha))? * (-x).exp()),
            Witness::Wright => {
                if t == 0.0 {
                    return Ok(if x > 0.0 { 0.0 } else { 1.0 });
                }
                wright(WrightArgs::new(-x * t.powf(-alpha / 2.0), -alpha / 2.0, 1.0))
            }
        }
    }

    /// `u_xx(x, t)` in closed form, continuous at `t = 0` for `x > 0`.
    pub fn u_xx(self, x: f64, t: f64, alpha: f64) -> Result<f64> {
        match self {
            Witness::Polynomial => Ok(2.0),
            Witness::MittagLeffler => self.value(x, t, alpha),
            Witness::Wright => {
                if t == 0.0 {
                    return Ok(0.0);
                }
                let r = alpha / 2.0;
                let w = wright(WrightArgs::new(-x * t.powf(-r), -r, 1.0 - alpha))?;
                Ok(t.powf(-alpha) * w)
            }
        }
    }
}

/// `I^alpha [u_xx(x, .)](t)` for a witness, by product quadrature on
/// `n_intervals` uniform steps of `[0, t]`.
pub fn equivalence_condition(
    w: Witness,
    x: f64,
    alpha: f64,
    t: f64,
    n_intervals: usize,
) -> Result<f64> {
    if !(x > 0.0) {
        return domain(format!("equivalence diagnostic needs x > 0, got {x}"));
    }
    let mut err = None;
    let f = SampledFn::uniform(
        |tau| {
            w.u_xx(x, tau, alpha).unwrap_or_else(|e| {
                err.get_or_insert(e);
                0.0
            })
        },
        t,
        n_intervals,
    )?;
    if let Some(e) = err {
        return Err(e);
    }
    rl_integral_num(&f, alpha, t)
}
