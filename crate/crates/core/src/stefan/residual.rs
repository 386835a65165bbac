//! Front equations. Every residual is positive near `x = 0+`, negative for
//! large `x`, and its positive roots are the front coefficients.

use std::f64::consts::PI;

use super::config::{DimensionlessConfig, PhaseConfig};
use crate::error::{domain, Error, Result};
use crate::specialfn::{
    erf, erfcx, gamma, mainardi, one_minus_wright, wright, wright_ratio, WrightArgs,
};

/// Below this `1 - W(-x; -alpha/2; 1)` is treated as zero.
const DEGENERATE_TOL: f64 = 1e-14;

fn check(x: f64, alpha: f64) -> Result<()> {
    if !(x > 0.0 && x.is_finite()) {
        return domain(format!("front functions need x > 0, got {x}"));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return domain(format!("alpha must lie in (0, 1], got {alpha}"));
    }
    Ok(())
}

fn complement(x: f64, r: f64) -> Result<f64> {
    let c = one_minus_wright(x, r)?;
    if c <= DEGENERATE_TOL {
        return Err(Error::Degenerate(format!(
            "1 - W(-{x}; -{r}; 1) = {c} vanishes"
        )));
    }
    Ok(c)
}

/// `F1(x) = M_{alpha/2}(x) / W(-x; -alpha/2; 1)`.
pub fn f1(x: f64, alpha: f64) -> Result<f64> {
    check(x, alpha)?;
    let r = alpha / 2.0;
    wright_ratio(-x, -r, 1.0 - r, 1.0)
}

/// `F2(x) = M_{alpha/2}(x) / (1 - W(-x; -alpha/2; 1))`.
pub fn f2(x: f64, alpha: f64) -> Result<f64> {
    check(x, alpha)?;
    let r = alpha / 2.0;
    Ok(mainardi(x, r)? / complement(x, r)?)
}

/// `G1(x) = W(-x; -alpha/2; 1 + alpha/2) / W(-x; -alpha/2; 1)`.
pub fn g1(x: f64, alpha: f64) -> Result<f64> {
    check(x, alpha)?;
    let r = alpha / 2.0;
    wright_ratio(-x, -r, 1.0 + r, 1.0)
}

/// `G2(x) = (2/alpha) W(-x; -alpha/2; alpha/2) / (1 - W(-x; -alpha/2; 1))`.
pub fn g2(x: f64, alpha: f64) -> Result<f64> {
    check(x, alpha)?;
    let r = alpha / 2.0;
    let w = wright(WrightArgs::new(-x, -r, r))?;
    Ok(w / (r * complement(x, r)?))
}

/// `W(-x; -r; r) / W(-x; -r; 1)`
fn q1(x: f64, r: f64) -> Result<f64> {
    wright_ratio(-x, -r, r, 1.0)
}

/// `W(-x; -r; r) / (1 - W(-x; -r; 1))`
fn q2(x: f64, r: f64) -> Result<f64> {
    Ok(wright(WrightArgs::new(-x, -r, r))? / complement(x, r)?)
}

/// Reduced Caputo front equation, scaled so that it matches the other two
/// residuals in the classical limit:
///
/// `Gamma(1-a/2) / (2 Gamma(1+a/2)) Ste [k U / lam F2(2x/lam) - F1(2x)] - x`.
pub fn caputo_front_residual(x: f64, cfg: &DimensionlessConfig) -> Result<f64> {
    let a = cfg.alpha;
    check(x, a)?;
    let c = gamma(1.0 - a / 2.0)? / (2.0 * gamma(1.0 + a / 2.0)?);
    let phase2 = cfg.k_ratio * cfg.u / cfg.lam * f2(2.0 * x / cfg.lam, a)?;
    Ok(c * cfg.ste * (phase2 - f1(2.0 * x, a)?) - x)
}

/// Reduced Riemann-Liouville front equation:
///
/// `(Ste/a) [k U / lam Q2(2x/lam) - Q1(2x)] - x` with
/// `Q1 = W(.; a/2) / W(.; 1)` and `Q2 = W(.; a/2) / (1 - W(.; 1))`.
pub fn rl_front_residual(x: f64, cfg: &DimensionlessConfig) -> Result<f64> {
    let a = cfg.alpha;
    check(x, a)?;
    let r = a / 2.0;
    let phase2 = cfg.k_ratio * cfg.u / cfg.lam * q2(2.0 * x / cfg.lam, r)?;
    Ok(cfg.ste / a * (phase2 - q1(2.0 * x, r)?) - x)
}

/// The same equation written with `G1`, `G2`:
/// `(Ste/2) [k U / lam G2(2x/lam) - G1(2x)] - (1 + Ste) x`.
pub fn rl_front_residual_g(x: f64, cfg: &DimensionlessConfig) -> Result<f64> {
    let a = cfg.alpha;
    check(x, a)?;
    let phase2 = cfg.k_ratio * cfg.u / cfg.lam * g2(2.0 * x / cfg.lam, a)?;
    Ok(cfg.ste / 2.0 * (phase2 - g1(2.0 * x, a)?) - (1.0 + cfg.ste) * x)
}

/// `exp(-y^2) / (sqrt(pi) erf(y))`
fn gauss_over_erf(y: f64) -> f64 {
    (-y * y).exp() / (PI.sqrt() * erf(y))
}

/// `exp(-y^2) / (sqrt(pi) erfc(y))`, finite for every `y`.
fn gauss_over_erfc(y: f64) -> f64 {
    1.0 / (PI.sqrt() * erfcx(y))
}

/// Classical (Neumann) front equation; `cfg.alpha` is not used.
///
/// `Ste [k U / lam e^{-x^2/lam^2} / (sqrt(pi) erf(x/lam)) - e^{-x^2} / (sqrt(pi) erfc(x))] - x`.
pub fn neumann_residual(x: f64, cfg: &DimensionlessConfig) -> Result<f64> {
    check(x, 1.0)?;
    let phase2 = cfg.k_ratio * cfg.u / cfg.lam * gauss_over_erf(x / cfg.lam);
    Ok(cfg.ste * (phase2 - gauss_over_erfc(x)) - x)
}

/// Dimensional Caputo front equation
/// `Gamma(1-a/2) [k_a2 (U0-Um)/lam_a2 F2(2 lt x) - k_a1 (Um-Ui)/lam_a1 F1(2x)]
///  - 2 rho l lam_a1 Gamma(1+a/2) x`, `lt = lam1/lam2`.
pub fn caputo_front_residual_dim(x: f64, p: &PhaseConfig) -> Result<f64> {
    let a = p.alpha();
    check(x, a)?;
    let q = p.inputs();
    let lt = p.lam_alpha1() / p.lam_alpha2();
    let phase2 = p.k_alpha2() * (q.u_0 - q.u_m) / p.lam_alpha2() * f2(2.0 * lt * x, a)?;
    let phase1 = p.k_alpha1() * (q.u_m - q.u_i) / p.lam_alpha1() * f1(2.0 * x, a)?;
    Ok(gamma(1.0 - a / 2.0)? * (phase2 - phase1)
        - 2.0 * p.rho_l() * p.lam_alpha1() * gamma(1.0 + a / 2.0)? * x)
}

/// Dimensional Riemann-Liouville front equation
/// `k_a2 (U0-Um)/(lam_a1 lam_a2 a) Q2(2 lt x) - k_a1 (Um-Ui)/(lam_a1^2 a) Q1(2x) - rho l x`.
pub fn rl_front_residual_dim(x: f64, p: &PhaseConfig) -> Result<f64> {
    let a = p.alpha();
    check(x, a)?;
    let q = p.inputs();
    let r = a / 2.0;
    let (l1, l2) = (p.lam_alpha1(), p.lam_alpha2());
    let phase2 = p.k_alpha2() * (q.u_0 - q.u_m) / (l1 * l2 * a) * q2(2.0 * l1 / l2 * x, r)?;
    let phase1 = p.k_alpha1() * (q.u_m - q.u_i) / (l1 * l1 * a) * q1(2.0 * x, r)?;
    Ok(phase2 - phase1 - p.rho_l() * x)
}

/// Dimensional classical front equation (`alpha` of the config is not used).
pub fn neumann_residual_dim(x: f64, p: &PhaseConfig) -> Result<f64> {
    check(x, 1.0)?;
    let q = p.inputs();
    let (l1, l2) = (p.lam1(), p.lam2());
    let phase2 = q.k2 * (q.u_0 - q.u_m) / (l1 * l2) * gauss_over_erf(l1 / l2 * x);
    let phase1 = q.k1 * (q.u_m - q.u_i) / (l1 * l1) * gauss_over_erfc(x);
    Ok(phase2 - phase1 - p.rho_l() * x)
}
