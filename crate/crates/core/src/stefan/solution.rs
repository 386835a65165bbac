use super::config::{DimensionlessConfig, Flavor, PhaseConfig};
use super::solve::FrontCoefficient;
use crate::error::{domain, Result};
use crate::specialfn::{erf, erfc, one_minus_wright, wright, WrightArgs};

/// Where the parameters of a solution came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Origin {
    Dimensionless(DimensionlessConfig),
    Dimensional(PhaseConfig),
}

/// Physical constants a solution is expressed in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConstants {
    pub alpha: f64,
    pub lam_a1: f64,
    pub lam_a2: f64,
    pub k_a1: f64,
    pub k_a2: f64,
    pub rho_l: f64,
    pub u_i: f64,
    pub u_m: f64,
    pub u_0: f64,
}

impl PhaseConstants {
    /// Reduced units: `lam_a1 = k1 = 1`, `rho l = 1/Ste`, `U_i = -1`, `U_m = 0`.
    pub fn dimensionless(cfg: &DimensionlessConfig, flavor: Flavor) -> Self {
        Self {
            alpha: if flavor == Flavor::Classical { 1.0 } else { cfg.alpha },
            lam_a1: 1.0,
            lam_a2: cfg.lam,
            k_a1: 1.0,
            k_a2: cfg.k_ratio,
            rho_l: 1.0 / cfg.ste,
            u_i: -1.0,
            u_m: 0.0,
            u_0: cfg.u,
        }
    }

    pub fn dimensional(p: &PhaseConfig, flavor: Flavor) -> Self {
        let q = p.inputs();
        let classical = flavor == Flavor::Classical;
        Self {
            alpha: if classical { 1.0 } else { p.alpha() },
            lam_a1: if classical { p.lam1() } else { p.lam_alpha1() },
            lam_a2: if classical { p.lam2() } else { p.lam_alpha2() },
            k_a1: if classical { q.k1 } else { p.k_alpha1() },
            k_a2: if classical { q.k2 } else { p.k_alpha2() },
            rho_l: p.rho_l(),
            u_i: q.u_i,
            u_m: q.u_m,
            u_0: q.u_0,
        }
    }
}

/// Explicit similarity solution: liquid temperature `u2` on `0 < x < s(t)`,
/// solid temperature `u1` on `x > s(t)` and the front `s(t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionTriple {
    flavor: Flavor,
    origin: Origin,
    coef: FrontCoefficient,
    k: PhaseConstants,
    /// `(U_m - U_i) / W(-2c; -a/2; 1)`, or the erfc analogue.
    scale1: f64,
    /// `(U_0 - U_m) / (1 - W(-2c lam_a1/lam_a2; -a/2; 1))`, or the erf analogue.
    scale2: f64,
}

impl SolutionTriple {
    fn build(origin: Origin, k: PhaseConstants, coef: FrontCoefficient) -> Result<Self> {
        if !(coef.value > 0.0) {
            return domain(format!("front coefficient must be positive, got {}", coef.value));
        }
        let c = coef.value;
        let lt = k.lam_a1 / k.lam_a2;
        let (w1, w2) = match coef.flavor {
            Flavor::Classical => (erfc(c), erf(c * lt)),
            _ => {
                let r = k.alpha / 2.0;
                (
                    wright(WrightArgs::new(-2.0 * c, -r, 1.0))?,
                    one_minus_wright(2.0 * c * lt, r)?,
                )
            }
        };
        Ok(Self {
            flavor: coef.flavor,
            origin,
            coef,
            scale1: (k.u_m - k.u_i) / w1,
            scale2: (k.u_0 - k.u_m) / w2,
            k,
        })
    }

    /// Solution of the reduced problem for the flavor recorded in `coef`.
    pub fn new(cfg: &DimensionlessConfig, coef: FrontCoefficient) -> Result<Self> {
        cfg.validate()?;
        let k = PhaseConstants::dimensionless(cfg, coef.flavor);
        Self::build(Origin::Dimensionless(*cfg), k, coef)
    }

    /// Solution of the dimensional problem for the flavor recorded in `coef`.
    pub fn from_phase(p: &PhaseConfig, coef: FrontCoefficient) -> Result<Self> {
        let k = PhaseConstants::dimensional(p, coef.flavor);
        Self::build(Origin::Dimensional(*p), k, coef)
    }

    fn expect(coef: &FrontCoefficient, flavor: Flavor) -> Result<()> {
        if coef.flavor != flavor {
            return domain(format!(
                "a {} coefficient cannot build a {} solution",
                coef.flavor, flavor
            ));
        }
        Ok(())
    }

    pub fn caputo(cfg: &DimensionlessConfig, coef: FrontCoefficient) -> Result<Self> {
        Self::expect(&coef, Flavor::Caputo)?;
        Self::new(cfg, coef)
    }

    pub fn rl(cfg: &DimensionlessConfig, coef: FrontCoefficient) -> Result<Self> {
        Self::expect(&coef, Flavor::Rl)?;
        Self::new(cfg, coef)
    }

    pub fn neumann(cfg: &DimensionlessConfig, coef: FrontCoefficient) -> Result<Self> {
        Self::expect(&coef, Flavor::Classical)?;
        Self::new(cfg, coef)
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn coefficient(&self) -> &FrontCoefficient {
        &self.coef
    }

    pub fn constants(&self) -> &PhaseConstants {
        &self.k
    }

    /// Effective order: 1 for the classical solution.
    pub fn alpha(&self) -> f64 {
        self.k.alpha
    }

    fn check_t(t: f64) -> Result<()> {
        if !(t > 0.0 && t.is_finite()) {
            return domain(format!("solution evaluators need t > 0, got {t}"));
        }
        Ok(())
    }

    fn check_x(x: f64) -> Result<()> {
        if !(x >= 0.0 && x.is_finite()) {
            return domain(format!("solution evaluators need x >= 0, got {x}"));
        }
        Ok(())
    }

    /// Front position `s(t) = 2 c lam_a1 t^(alpha/2)`.
    pub fn front(&self, t: f64) -> Result<f64> {
        if !(t >= 0.0 && t.is_finite()) {
            return domain(format!("front needs t >= 0, got {t}"));
        }
        Ok(2.0 * self.coef.value * self.k.lam_a1 * t.powf(self.k.alpha / 2.0))
    }

    /// Phase-1 (solid) temperature formula; meaningful for `x >= s(t)`.
    pub fn u1(&self, x: f64, t: f64) -> Result<f64> {
        Self::check_t(t)?;
        Self::check_x(x)?;
        let k = &self.k;
        let shape = match self.flavor {
            Flavor::Classical => erfc(x / (2.0 * k.lam_a1 * t.sqrt())),
            _ => {
                let r = k.alpha / 2.0;
                wright(WrightArgs::new(-x / (k.lam_a1 * t.powf(r)), -r, 1.0))?
            }
        };
        Ok(k.u_i + self.scale1 * shape)
    }

    /// Phase-2 (liquid) temperature formula; meaningful for `0 <= x <= s(t)`.
    pub fn u2(&self, x: f64, t: f64) -> Result<f64> {
        Self::check_t(t)?;
        Self::check_x(x)?;
        let k = &self.k;
        let shape = match self.flavor {
            Flavor::Classical => erf(x / (2.0 * k.lam_a2 * t.sqrt())),
            _ => {
                let r = k.alpha / 2.0;
                one_minus_wright(x / (k.lam_a2 * t.powf(r)), r)?
            }
        };
        Ok(k.u_0 - self.scale2 * shape)
    }

    /// Temperature on the whole half line: `u2` behind the front, `u1` ahead of it.
    pub fn u(&self, x: f64, t: f64) -> Result<f64> {
        let s = self.front(t)?;
        if x < s {
            self.u2(x, t)
        } else if x > s {
            self.u1(x, t)
        } else {
            Ok(self.k.u_m)
        }
    }
}
