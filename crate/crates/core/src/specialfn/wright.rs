//! The Wright function
//!
//! ```text
//! W(x; rho; beta) = sum_{k>=0} x^k / (k! Gamma(rho k + beta)),   rho > -1,
//! ```
//!
//! and its Mainardi specialisation `M_rho(x) = W(-x; -rho; 1 - rho)`.
//!
//! Two evaluation routes are used.
//!
//! * For `x >= 0`, or `rho >= 0`, the power series is summed in double-double
//!   arithmetic. Terms with `rho k + beta` at a pole of Gamma vanish.
//! * For `x < 0` and `-1 < rho < 0` (the similarity kernels of time-fractional
//!   diffusion) the series alternates and its largest term grows like
//!   `exp(sigma)` while the sum decays like `exp(-sigma)`, with
//!   `sigma ~ (1-r) (r^r |x|)^(1/(1-r))`, `r = -rho`. Rounding of the
//!   coefficients alone then destroys the result well before `|x| = 10`.
//!   Instead `W` is written as the inverse Laplace transform
//!
//!   ```text
//!   W(-x; -r; beta) = 1/(2 pi i) \int_Ha exp(z - x z^r) z^(-beta) dz
//!   ```
//!
//!   and the Hankel contour is deformed onto a Talbot path
//!   `z(th) = s (th cot th + i th)` that crosses the real axis at the saddle
//!   point `s = (r x)^(1/(1-r))` of the exponent. Along that path the
//!   integrand peaks at the crossing, so the midpoint rule in `th` converges
//!   geometrically and the result carries a relative (not absolute) error of a
//!   few ulps, even deep in the tail. The integral is returned with its
//!   exponential scale factored out, which lets quotients of two tail values be
//!   formed without underflow.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use super::dd::DoubleDouble;
use super::gamma::rgamma;
use crate::error::{domain, Error, Result};

/// Arguments of `W(x; rho; beta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WrightArgs {
    pub x: f64,
    pub rho: f64,
    pub beta: f64,
}

impl WrightArgs {
    pub fn new(x: f64, rho: f64, beta: f64) -> Self {
        Self { x, rho, beta }
    }

    fn validate(&self) -> Result<()> {
        if !(self.x.is_finite() && self.rho.is_finite() && self.beta.is_finite()) {
            return domain(format!("non-finite Wright arguments {self:?}"));
        }
        if self.rho <= -1.0 {
            return domain(format!("Wright function needs rho > -1, got {}", self.rho));
        }
        Ok(())
    }
}

/// Term budget of the power series.
pub const MAX_SERIES_TERMS: usize = 400;

const CONTOUR_NODES: usize = 96;
const MIN_CONTOUR_NODES: usize = 48;

/// Whether the alternating series for `W(-x; -r; .)` has O(1) terms and
/// converges within the budget. There it is preferred, since it avoids the
/// cancellation the contour suffers near zeros of `W` at small `x`.
fn series_is_safe(x: f64, r: f64) -> bool {
    x <= 0.5 || (x <= 2.0 && r <= 0.5)
}
const CONTOUR_DECAY: f64 = 60.0;

/// A value represented as `mantissa * exp(log_common + log_scale)`.
///
/// `log_common` depends on `(x, rho)` only, so it cancels exactly in the
/// quotient of two values that differ in `beta`; it can be far larger than
/// `log_scale` (around `-1e20` for `rho` near -1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub mantissa: f64,
    pub log_common: f64,
    pub log_scale: f64,
}

impl Scaled {
    fn plain(v: f64) -> Self {
        Self { mantissa: v, log_common: 0.0, log_scale: 0.0 }
    }

    pub fn value(self) -> f64 {
        if self.mantissa == 0.0 {
            return 0.0;
        }
        self.mantissa * (self.log_common + self.log_scale).exp()
    }

    /// `self / other`, formed without leaving the scaled representation.
    pub fn ratio(self, other: Scaled) -> f64 {
        let common = if self.log_common == other.log_common {
            0.0
        } else {
            self.log_common - other.log_common
        };
        (self.mantissa / other.mantissa) * (common + self.log_scale - other.log_scale).exp()
    }
}

/// `(e^u - 1) - c (e^(r u) - 1)` with `w = e^u`, accurate for small complex `u` even when
/// the linear terms cancel (`c r = 1` at the saddle).
fn phase_increment(w: Complex64, u: Complex64, r: f64, c: f64) -> Complex64 {
    if u.norm_sqr() > 0.25 {
        return (w - 1.0) - c * ((r * u).exp() - 1.0);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    let mut un = Complex64::new(1.0, 0.0);
    let mut rn = 1.0;
    for n in 1..=40 {
        un = un * u * INV_N[n];
        rn *= r;
        let term = un * (1.0 - c * rn);
        acc += term;
        if n > 2 && term.norm_sqr() <= 1e-36 * acc.norm_sqr() {
            break;
        }
    }
    acc
}

const INV_N: [f64; 41] = {
    let mut t = [0.0; 41];
    let mut n = 1;
    while n < 41 {
        t[n] = 1.0 / n as f64;
        n += 1;
    }
    t
};

/// A midpoint node of the unscaled path `w(th) = th cot th + i th`.
struct PathNode {
    w: Complex64,
    dw: Complex64,
    u: Complex64,
}

impl PathNode {
    fn at(th: f64) -> Self {
        let (s, co) = th.sin_cos();
        let cot = co / s;
        let w = Complex64::new(th * cot, th);
        Self { w, dw: Complex64::new(cot - th / (s * s), 1.0), u: w.ln() }
    }
}

/// Nodes of the untruncated path, shared by every evaluation that uses it.
fn full_path() -> &'static [PathNode] {
    static NODES: OnceLock<Vec<PathNode>> = OnceLock::new();
    let h = PI / CONTOUR_NODES as f64;
    NODES.get_or_init(|| (0..CONTOUR_NODES).map(|k| PathNode::at((k as f64 + 0.5) * h)).collect())
}

/// `W(-x; -r; beta)` for `x > 0`, `0 < r < 1`, by the Talbot-deformed Hankel integral.
fn hankel_scaled(x: f64, r: f64, beta: f64) -> Scaled {
    let saddle = (r * x).powf(1.0 / (1.0 - r));
    // Off the saddle regime the crossing point is pushed out as r -> 1,
    // where the integrand decays more slowly along the path.
    let sigma = saddle.max(3.0 / (1.0 - r).sqrt());
    let c = x * sigma.powf(r - 1.0);
    // Exponent of the integrand where the path crosses the real axis, split
    // into its beta-free part and the rest.
    let common = sigma - x * sigma.powf(r);

    // Near the crossing the integrand is a Gaussian in th with curvature
    // kappa; beyond th_max it is below exp(-CONTOUR_DECAY) of its peak.
    let kappa = sigma * ((1.0 - c * r) / 3.0 + c * r * (1.0 - r) / 2.0);
    let th_max = (2.0 * CONTOUR_DECAY / kappa).sqrt().min(PI);
    // Keep the node spacing of the full path, but never drop below
    // MIN_CONTOUR_NODES across the truncated Gaussian.
    let nodes = ((CONTOUR_NODES as f64 * th_max / PI).ceil() as usize)
        .clamp(MIN_CONTOUR_NODES, CONTOUR_NODES);
    let h = th_max / nodes as f64;

    let mut acc = 0.0;
    let mut add = |n: &PathNode| {
        let expo = sigma * phase_increment(n.w, n.u, r, c) - beta * n.u;
        if expo.re >= -745.0 {
            acc += (expo.exp() * n.dw).im;
        }
    };
    if nodes == CONTOUR_NODES && th_max == PI {
        full_path().iter().for_each(&mut add);
    } else {
        (0..nodes).for_each(|k| add(&PathNode::at((k as f64 + 0.5) * h)));
    }
    // Only the upper half of the path is summed; the lower half is its conjugate.
    // The factor sigma from dz = sigma dw is folded into the scale.
    Scaled {
        mantissa: acc * h / PI,
        log_common: common,
        log_scale: (1.0 - beta) * sigma.ln(),
    }
}

/// `x^k / k! / Gamma(a)`, with `p = x^k / k!` carried in double-double.
/// Falls back to logarithms once `p` leaves the normal range or `1/Gamma(a)`
/// overflows, so that neither factor silently flushes the term to zero.
fn series_term(k: usize, x: f64, a: f64, p: DoubleDouble) -> DoubleDouble {
    let g = rgamma(a);
    if g == 0.0 {
        return DoubleDouble::ZERO;
    }
    if g.is_finite() && p.hi.abs() > 1e-280 {
        return p.mul_f64(g);
    }
    let kf = k as f64;
    let ln_p = kf * x.abs().ln() - libm::lgamma(kf + 1.0);
    let sign_p = if x < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
    let (ln_g, sign_g) = if a > 0.0 {
        (-libm::lgamma(a), 1.0)
    } else {
        // 1/Gamma(a) = sin(pi a) Gamma(1 - a) / pi
        let n = a.round();
        let sp = (PI * (a - n)).sin() * if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
        (sp.abs().ln() + libm::lgamma(1.0 - a) - PI.ln(), sp.signum())
    };
    DoubleDouble::new(sign_p * sign_g * (ln_p + ln_g).exp())
}

/// Power series of `W`, summed in double-double arithmetic.
///
/// Accurate whenever the terms do not cancel catastrophically (`x >= 0`, or
/// small `|x|`); [`wright`] picks this route automatically where it is safe.
pub fn wright_series(a: WrightArgs) -> Result<f64> {
    a.validate()?;
    series_sum(a.x, a.rho, a.beta, 0)
}

fn series_sum(x: f64, rho: f64, beta: f64, first: usize) -> Result<f64> {
    if x == 0.0 {
        return Ok(if first == 0 { rgamma(beta) } else { 0.0 });
    }
    let mut sum = DoubleDouble::ZERO;
    let mut p = DoubleDouble::ONE;
    let mut quiet = 0;
    for k in 0..MAX_SERIES_TERMS {
        if k >= first {
            let term = series_term(k, x, rho * k as f64 + beta, p);
            sum += term;
            let mag = term.hi.abs();
            // Three consecutive negligible terms: isolated zeros at Gamma poles
            // must not stop the summation early.
            if mag <= 1e-30 * sum.hi.abs() {
                quiet += 1;
                if quiet >= 3 {
                    return Ok(sum.to_f64());
                }
            } else {
                quiet = 0;
            }
        }
        p = p.mul_f64(x).div_f64((k + 1) as f64);
    }
    Err(Error::NonConvergence { x, rho, beta, terms: MAX_SERIES_TERMS })
}

/// `W(x; rho; beta)` in scaled form.
pub fn wright_scaled(a: WrightArgs) -> Result<Scaled> {
    a.validate()?;
    if a.x < 0.0 && a.rho < 0.0 && !series_is_safe(-a.x, -a.rho) {
        Ok(hankel_scaled(-a.x, -a.rho, a.beta))
    } else {
        series_sum(a.x, a.rho, a.beta, 0).map(Scaled::plain)
    }
}

/// The Wright function `W(x; rho; beta)`, `rho > -1`.
pub fn wright(a: WrightArgs) -> Result<f64> {
    wright_scaled(a).map(Scaled::value)
}

/// `W(x; rho; beta_num) / W(x; rho; beta_den)`, stable in the far tail where
/// both factors underflow.
pub fn wright_ratio(x: f64, rho: f64, beta_num: f64, beta_den: f64) -> Result<f64> {
    let num = wright_scaled(WrightArgs::new(x, rho, beta_num))?;
    let den = wright_scaled(WrightArgs::new(x, rho, beta_den))?;
    if den.mantissa == 0.0 {
        return Err(Error::Degenerate(format!(
            "W({x}; {rho}; {beta_den}) vanishes in the denominator"
        )));
    }
    Ok(num.ratio(den))
}

/// `d/dx W(x; rho; beta) = W(x; rho; rho + beta)`.
pub fn wright_dx(a: WrightArgs) -> Result<f64> {
    wright(WrightArgs::new(a.x, a.rho, a.rho + a.beta))
}

/// Mainardi function `M_rho(x) = W(-x; -rho; 1 - rho)`, `0 < rho < 1`.
pub fn mainardi(x: f64, rho: f64) -> Result<f64> {
    if !(rho > 0.0 && rho < 1.0) {
        return domain(format!("Mainardi function needs 0 < rho < 1, got {rho}"));
    }
    wright(WrightArgs::new(-x, -rho, 1.0 - rho))
}

/// `1 - W(-x; -rho; 1)` for `x >= 0`, without cancellation near `x = 0`.
pub fn one_minus_wright(x: f64, rho: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return domain(format!("one_minus_wright needs x >= 0, got {x}"));
    }
    if x < 1.0 && series_is_safe(x, rho) {
        // Drop the k = 0 term (which is exactly 1) and negate the rest.
        WrightArgs::new(-x, -rho, 1.0).validate()?;
        Ok(-series_sum(-x, -rho, 1.0, 1)?)
    } else {
        Ok(1.0 - wright(WrightArgs::new(-x, -rho, 1.0))?)
    }
}

/// One-parameter Mittag-Leffler function `E_a(z) = sum z^k / Gamma(a k + 1)`
/// by direct summation; intended for moderate `|z|`.
pub fn mittag_leffler(a: f64, z: f64) -> Result<f64> {
    if !(a > 0.0) {
        return domain(format!("Mittag-Leffler order must be positive, got {a}"));
    }
    let mut sum = DoubleDouble::ZERO;
    let mut zk = DoubleDouble::ONE;
    for k in 0..MAX_SERIES_TERMS {
        let term = zk.mul_f64(rgamma(a * k as f64 + 1.0));
        sum += term;
        if k > 2 && term.hi.abs() <= 1e-30 * sum.hi.abs() {
            return Ok(sum.to_f64());
        }
        zk = zk.mul_f64(z);
    }
    Err(Error::NonConvergence { x: z, rho: a, beta: 1.0, terms: MAX_SERIES_TERMS })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialfn::{erfc, gamma};

    fn w(x: f64, rho: f64, beta: f64) -> f64 {
        wright(WrightArgs::new(x, rho, beta)).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn origin_is_reciprocal_gamma() {
        assert_eq!(w(0.0, -0.25, 1.0), 1.0);
        assert_eq!(w(0.0, -0.3, 1.0), 1.0);
        assert!(rel(w(0.0, -0.25, 0.75), 1.0 / gamma(0.75).unwrap()) < 1e-15);
        // 1/Gamma(0) = 0
        assert_eq!(w(0.0, -0.5, 0.0), 0.0);
    }

    #[test]
    fn half_order_member_is_erfc() {
        assert!(rel(w(-2.0, -0.5, 1.0), erfc(1.0)) < 1e-13);
        assert!(rel(w(-2.0, -0.5, 1.0), 0.157_299_207_050_285_13) < 1e-13);
    }

    #[test]
    fn rejects_rho_at_or_below_minus_one() {
        assert!(matches!(wright(WrightArgs::new(1.0, -1.0, 1.0)), Err(Error::Domain(_))));
        assert!(matches!(wright(WrightArgs::new(1.0, -1.5, 1.0)), Err(Error::Domain(_))));
        assert!(matches!(wright(WrightArgs::new(f64::NAN, 0.5, 1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn series_budget_exhaustion_is_reported() {
        // W(x; rho; beta) with large positive x and tiny rho needs far more than 400 terms.
        let r = wright(WrightArgs::new(500.0, 0.0, 1.0));
        assert!(matches!(r, Err(Error::NonConvergence { .. })), "{r:?}");
    }

    #[test]
    fn contour_and_series_agree_where_the_series_is_safe() {
        for &(x, rho, beta) in &[
            (-0.3, -0.25, 1.0),
            (-1.0, -0.45, 0.55),
            (-0.7, -0.1, 1.3),
            (-1.5, -0.4, 0.2),
            (-0.05, -0.8, 2.0),
        ] {
            let a = WrightArgs::new(x, rho, beta);
            let s = wright_series(a).unwrap();
            let c = wright(a).unwrap();
            assert!(rel(c, s) < 1e-13, "{a:?}: {c} vs {s}");
        }
    }

    #[test]
    fn slow_series_is_reported_not_truncated() {
        // Terms peak near k = 100 and stay above 1e-30 beyond the budget.
        let a = WrightArgs::new(-1.754_231_997_906_515, -0.898_480_483_743_008_9, 0.1);
        assert!(matches!(wright_series(a), Err(Error::NonConvergence { .. })));
        // 80-digit reference
        assert!(rel(wright(a).unwrap(), 3.473_068_952_171_921e-4) < 1e-12);
    }

    #[test]
    fn one_minus_w_is_accurate_near_zero() {
        let x = 1e-8;
        let r = 0.25;
        let v = one_minus_wright(x, r).unwrap();
        // leading term x / Gamma(1 - r)
        assert!(rel(v, x / gamma(1.0 - r).unwrap()) < 1e-7);
        let x = 2.5;
        assert!((one_minus_wright(x, r).unwrap() - (1.0 - w(-x, -r, 1.0))).abs() < 1e-15);
        let x = 0.999;
        assert!((one_minus_wright(x, r).unwrap() - (1.0 - w(-x, -r, 1.0))).abs() < 1e-15);
    }

    #[test]
    fn ratio_survives_underflow_of_both_factors() {
        // W(-4000; -1/2; .) ~ exp(-4e6) underflows; the ratio tends to x/2 as x -> inf
        // (erfc asymptotics: M_{1/2}(2y)/erfc(y) ~ y).
        let x = 4000.0;
        let q = wright_ratio(-x, -0.5, 0.5, 1.0).unwrap();
        assert!(rel(q, x / 2.0) < 1e-6, "{q}");
        assert_eq!(w(-x, -0.5, 1.0), 0.0);
    }

    #[test]
    fn mittag_leffler_special_cases() {
        assert!(rel(mittag_leffler(1.0, 0.7).unwrap(), 0.7f64.exp()) < 1e-15);
        // E_2(z^2) = cosh z
        assert!(rel(mittag_leffler(2.0, 0.81).unwrap(), 0.9f64.cosh()) < 1e-15);
    }
}
