//! Run configuration: an optional JSON file merged under the command-line flags.

use std::path::{Path, PathBuf};

use fracstefan_core::{DimensionlessConfig, Flavor};
use serde::Deserialize;

use crate::args::ModelArgs;
use crate::error::{config, CliError};

/// Contents of a `--config` file. Every field is optional; see `docs/config.md`.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub preset: Option<String>,
    pub lam: Option<f64>,
    pub k_ratio: Option<f64>,
    pub u: Option<f64>,
    pub ste: Option<f64>,
    pub alpha: Option<f64>,
    pub alphas: Option<Vec<f64>>,
    pub flavor: Option<String>,
    pub output: Option<PathBuf>,
    pub front_output: Option<PathBuf>,
    pub nx: Option<usize>,
    pub nt: Option<usize>,
    pub t_max: Option<f64>,
    pub y_max: Option<f64>,
    pub grid: Option<usize>,
    #[serde(default)]
    pub tolerances: Tolerances,
}

/// Pass thresholds of `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Tolerances {
    /// Largest accepted PDE residual.
    pub pde: f64,
    /// Smallest accepted residual ratio under grid doubling.
    pub halving: f64,
    /// Largest accepted Stefan-condition residual.
    pub stefan: f64,
    /// Smallest accepted relative gap between the two flux limits.
    pub interchange: f64,
    /// PDE and Stefan thresholds for the classical flavor.
    pub classical_pde: f64,
    pub classical_stefan: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            pde: 1e-3,
            halving: 1.8,
            stefan: 1e-9,
            interchange: 1e-6,
            classical_pde: 1e-8,
            classical_stefan: 1e-12,
        }
    }
}

impl Tolerances {
    fn validate(&self) -> Result<(), CliError> {
        let all = [
            self.pde,
            self.halving,
            self.stefan,
            self.interchange,
            self.classical_pde,
            self.classical_stefan,
        ];
        if all.iter().any(|t| !(*t > 0.0 && t.is_finite())) {
            return config(format!("tolerances must be positive, got {self:?}"));
        }
        Ok(())
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)?;
        let cfg: Self = serde_json::from_str(&text)?;
        cfg.tolerances.validate()?;
        Ok(cfg)
    }

    pub fn load_opt(path: Option<&Path>) -> Result<Self, CliError> {
        path.map_or(Ok(Self::default()), Self::load)
    }

    /// Preset (if any) with explicit parameters laid over it: file values
    /// first, then flags.
    pub fn model(&self, flags: &ModelArgs, alpha: f64) -> Result<DimensionlessConfig, CliError> {
        let preset = flags.preset.as_ref().or(self.preset.as_ref());
        let base = match preset {
            Some(name) => Some(DimensionlessConfig::preset(name, alpha)?),
            None => None,
        };
        let pick = |flag: Option<f64>, file: Option<f64>, from_base: Option<f64>, name: &str| {
            flag.or(file).or(from_base).ok_or_else(|| {
                CliError::Config(format!("missing --{name} (or give a --preset)"))
            })
        };
        let cfg = DimensionlessConfig::new(
            pick(flags.lam, self.lam, base.map(|b| b.lam), "lam")?,
            pick(flags.k_ratio, self.k_ratio, base.map(|b| b.k_ratio), "k-ratio")?,
            pick(flags.u, self.u, base.map(|b| b.u), "u")?,
            pick(flags.ste, self.ste, base.map(|b| b.ste), "ste")?,
            alpha,
        )?;
        Ok(cfg)
    }

    pub fn flavor(&self, flag: Option<Flavor>) -> Result<Flavor, CliError> {
        match (flag, &self.flavor) {
            (Some(f), _) => Ok(f),
            (None, Some(s)) => Ok(s.parse()?),
            (None, None) => config("missing --flavor"),
        }
    }

    /// Order for `flavor`; the classical problem has order 1 regardless.
    pub fn alpha(&self, flag: Option<f64>, flavor: Flavor) -> Result<f64, CliError> {
        if flavor == Flavor::Classical {
            return Ok(1.0);
        }
        match flag.or(self.alpha) {
            Some(a) => Ok(a),
            None => config("missing --alpha"),
        }
    }

    pub fn output(&self, flag: &Option<PathBuf>) -> Option<PathBuf> {
        flag.clone().or_else(|| self.output.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_which_overrides_preset() {
        let file = RunConfig { preset: Some("test1".into()), ste: Some(2.0), ..Default::default() };
        let flags = ModelArgs { lam: Some(3.0), ..Default::default() };
        let cfg = file.model(&flags, 0.5).unwrap();
        assert_eq!((cfg.lam, cfg.k_ratio, cfg.u, cfg.ste), (3.0, 0.5, 1.0, 2.0));
        let flags = ModelArgs { preset: Some("test4".into()), ste: Some(0.7), ..Default::default() };
        let cfg = file.model(&flags, 0.5).unwrap();
        assert_eq!((cfg.lam, cfg.k_ratio, cfg.u, cfg.ste), (2.0, 2.0, 1.0, 0.7));
    }

    #[test]
    fn presets_expand_to_the_table() {
        let rows = [(0.5, 0.5, 1.0, 0.5), (2.0, 2.0, 1.0, 0.5), (0.5, 0.5, 1.0, 1.2), (2.0, 2.0, 1.0, 1.2)];
        for (name, row) in DimensionlessConfig::PRESET_NAMES.iter().zip(rows) {
            let flags = ModelArgs { preset: Some(name.to_string()), ..Default::default() };
            let c = RunConfig::default().model(&flags, 0.3).unwrap();
            assert_eq!((c.lam, c.k_ratio, c.u, c.ste), row);
        }
    }

    #[test]
    fn incomplete_or_invalid_input() {
        let flags = ModelArgs { lam: Some(1.0), ..Default::default() };
        assert!(matches!(RunConfig::default().model(&flags, 0.5), Err(CliError::Config(_))));
        assert!(RunConfig::default().flavor(None).is_err());
        let bad: Result<RunConfig, _> = serde_json::from_str(r#"{"presett": "test1"}"#);
        assert!(bad.is_err());
        let t: RunConfig = serde_json::from_str(r#"{"tolerances": {"pde": -1}}"#).unwrap();
        assert!(t.tolerances.validate().is_err());
    }
}
