use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Which front equation / solution family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Flavor {
    /// Time-fractional Caputo problem.
    Caputo,
    /// Riemann-Liouville flux problem.
    Rl,
    /// Classical (Neumann) problem, `alpha = 1`.
    Classical,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Caputo, Flavor::Rl, Flavor::Classical];

    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Caputo => "caputo",
            Flavor::Rl => "rl",
            Flavor::Classical => "classical",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "caputo" => Ok(Flavor::Caputo),
            "rl" | "riemann-liouville" => Ok(Flavor::Rl),
            "classical" | "neumann" => Ok(Flavor::Classical),
            other => domain(format!("unknown flavor '{other}' (caputo, rl, classical)")),
        }
    }
}

/// Reduced two-phase instance in phase-1 units.
///
/// With `U_m = 0` and `|U_i|` as temperature unit the problem only depends on
/// `lam = lam2/lam1`, `k_ratio = k2/k1`, `u = U_0/|U_i|`, the Stefan number
/// `ste = |U_i| c1 / l` and the order `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessConfig {
    pub lam: f64,
    pub k_ratio: f64,
    pub u: f64,
    pub ste: f64,
    pub alpha: f64,
}

impl DimensionlessConfig {
    pub const PRESET_NAMES: [&'static str; 4] = ["test1", "test2", "test3", "test4"];

    pub fn new(lam: f64, k_ratio: f64, u: f64, ste: f64, alpha: f64) -> Result<Self> {
        let cfg = Self { lam, k_ratio, u, ste, alpha };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("lam", self.lam),
            ("k_ratio", self.k_ratio),
            ("u", self.u),
            ("ste", self.ste),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return domain(format!("{name} must be positive and finite, got {v}"));
            }
        }
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return domain(format!("alpha must lie in (0, 1], got {}", self.alpha));
        }
        Ok(())
    }

    /// The four parameter sets `(lam, k2/k1, U, Ste)` of the reference study.
    pub fn preset(name: &str, alpha: f64) -> Result<Self> {
        let (lam, k, u, ste) = match name.to_ascii_lowercase().as_str() {
            "test1" => (0.5, 0.5, 1.0, 0.5),
            "test2" => (2.0, 2.0, 1.0, 0.5),
            "test3" => (0.5, 0.5, 1.0, 1.2),
            "test4" => (2.0, 2.0, 1.0, 1.2),
            other => return domain(format!("unknown preset '{other}' (test1..test4)")),
        };
        Self::new(lam, k, u, ste, alpha)
    }

    pub fn with_alpha(&self, alpha: f64) -> Result<Self> {
        Self::new(self.lam, self.k_ratio, self.u, self.ste, alpha)
    }
}

/// Physical inputs of a two-phase instance; see [`PhaseConfig::new`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseInputs {
    pub k1: f64,
    pub k2: f64,
    pub rho_mass: f64,
    pub c1: f64,
    pub c2: f64,
    pub latent_l: f64,
    pub u_i: f64,
    pub u_m: f64,
    pub u_0: f64,
    pub alpha: f64,
    pub x0: f64,
}

/// Dimensional two-phase instance with the derived diffusivities
/// `lam_i = sqrt(k_i / (rho c_i))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseConfig {
    inputs: PhaseInputs,
    lam1: f64,
    lam2: f64,
}

impl PhaseConfig {
    pub fn new(inputs: PhaseInputs) -> Result<Self> {
        let p = &inputs;
        for (name, v) in [
            ("k1", p.k1),
            ("k2", p.k2),
            ("rho_mass", p.rho_mass),
            ("c1", p.c1),
            ("c2", p.c2),
            ("latent_l", p.latent_l),
            ("x0", p.x0),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return domain(format!("{name} must be positive and finite, got {v}"));
            }
        }
        if !(p.u_i < p.u_m && p.u_m < p.u_0) || !(p.u_0.is_finite() && p.u_i.is_finite()) {
            return domain(format!(
                "temperatures must satisfy U_i < U_m < U_0, got {} {} {}",
                p.u_i, p.u_m, p.u_0
            ));
        }
        if !(p.alpha > 0.0 && p.alpha <= 1.0) {
            return domain(format!("alpha must lie in (0, 1], got {}", p.alpha));
        }
        Ok(Self {
            lam1: (p.k1 / (p.rho_mass * p.c1)).sqrt(),
            lam2: (p.k2 / (p.rho_mass * p.c2)).sqrt(),
            inputs,
        })
    }

    pub fn inputs(&self) -> &PhaseInputs {
        &self.inputs
    }

    pub fn alpha(&self) -> f64 {
        self.inputs.alpha
    }

    pub fn lam1(&self) -> f64 {
        self.lam1
    }

    pub fn lam2(&self) -> f64 {
        self.lam2
    }

    /// `mu_alpha = (x0^2 / lam1^2)^(1 - alpha)`, with units of `t^(1-alpha)`.
    pub fn mu_alpha(&self) -> f64 {
        (self.inputs.x0 * self.inputs.x0 / (self.lam1 * self.lam1)).powf(1.0 - self.inputs.alpha)
    }

    pub fn lam_alpha1(&self) -> f64 {
        self.lam1 * self.mu_alpha().sqrt()
    }

    pub fn lam_alpha2(&self) -> f64 {
        self.lam2 * self.mu_alpha().sqrt()
    }

    pub fn k_alpha1(&self) -> f64 {
        self.inputs.k1 * self.mu_alpha()
    }

    pub fn k_alpha2(&self) -> f64 {
        self.inputs.k2 * self.mu_alpha()
    }

    /// Latent heat per unit volume `rho l`.
    pub fn rho_l(&self) -> f64 {
        self.inputs.rho_mass * self.inputs.latent_l
    }

    /// Reduced instance with temperature unit `U_m - U_i` measured from `U_m`.
    pub fn to_dimensionless(&self) -> DimensionlessConfig {
        let p = &self.inputs;
        let unit = p.u_m - p.u_i;
        DimensionlessConfig {
            lam: self.lam2 / self.lam1,
            k_ratio: p.k2 / p.k1,
            u: (p.u_0 - p.u_m) / unit,
            ste: unit * p.c1 / p.latent_l,
            alpha: p.alpha,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(alpha: f64, x0: f64) -> PhaseConfig {
        PhaseConfig::new(PhaseInputs {
            k1: 1.0,
            k2: 2.0,
            rho_mass: 1.0,
            c1: 1.0,
            c2: 1.0,
            latent_l: 2.0,
            u_i: -1.0,
            u_m: 0.0,
            u_0: 1.0,
            alpha,
            x0,
        })
        .unwrap()
    }

    #[test]
    fn presets_expand_to_the_reference_table() {
        let t = |n| DimensionlessConfig::preset(n, 0.5).unwrap();
        assert_eq!((t("test1").lam, t("test1").k_ratio, t("test1").u, t("test1").ste), (0.5, 0.5, 1.0, 0.5));
        assert_eq!((t("test2").lam, t("test2").k_ratio, t("test2").u, t("test2").ste), (2.0, 2.0, 1.0, 0.5));
        assert_eq!((t("test3").lam, t("test3").k_ratio, t("test3").u, t("test3").ste), (0.5, 0.5, 1.0, 1.2));
        assert_eq!((t("test4").lam, t("test4").k_ratio, t("test4").u, t("test4").ste), (2.0, 2.0, 1.0, 1.2));
        assert!(DimensionlessConfig::preset("test5", 0.5).is_err());
    }

    #[test]
    fn validation() {
        assert!(DimensionlessConfig::new(0.5, 0.5, 1.0, 0.5, 1.0).is_ok());
        assert!(DimensionlessConfig::new(0.5, 0.5, 1.0, 0.5, 0.0).is_err());
        assert!(DimensionlessConfig::new(0.5, 0.5, 1.0, 0.5, 1.1).is_err());
        assert!(DimensionlessConfig::new(-0.5, 0.5, 1.0, 0.5, 0.5).is_err());
        let mut inputs = *sample(0.5, 1.0).inputs();
        inputs.u_m = 2.0;
        assert!(PhaseConfig::new(inputs).is_err());
        inputs.u_m = 0.0;
        inputs.c2 = 0.0;
        assert!(PhaseConfig::new(inputs).is_err());
    }

    #[test]
    fn reduction_and_mu() {
        let p = sample(0.6, 3.0);
        let d = p.to_dimensionless();
        assert!((d.lam - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!((d.k_ratio, d.u, d.ste, d.alpha), (2.0, 1.0, 0.5, 0.6));
        assert!((p.lam2() * p.lam2() - 2.0).abs() < 1e-14);
        assert!((p.mu_alpha() - 9f64.powf(0.4)).abs() < 1e-14);
        assert_eq!(sample(1.0, 3.0).mu_alpha(), 1.0);
        // x0 = lam1: unit diffusion time
        assert_eq!(sample(0.3, 1.0).mu_alpha(), 1.0);
    }

    #[test]
    fn flavor_round_trip() {
        for f in Flavor::ALL {
            assert_eq!(f.as_str().parse::<Flavor>().unwrap(), f);
        }
        assert!("fourier".parse::<Flavor>().is_err());
    }
}
