//! Run configuration: command-line flags over a TOML file over defaults.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_GRID: usize = 128;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunConfig {
    pub tol: f64,
    pub cluster_tol: f64,
    pub nu5: f64,
    pub seed: u64,
    pub grid: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            cluster_tol: DEFAULT_CLUSTER_TOL,
            nu5: resonance_core::DEFAULT_NU5,
            seed: DEFAULT_SEED,
            grid: DEFAULT_GRID,
        }
    }
}

/// Partial settings, as read from a config file or from flags.
#[derive(Debug, Clone, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Overrides {
    pub tol: Option<f64>,
    pub cluster_tol: Option<f64>,
    pub nu5: Option<f64>,
    pub seed: Option<u64>,
    pub grid: Option<usize>,
}

impl Overrides {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        Self::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }
}

impl RunConfig {
    /// Applies `file` and then `flags` on top of the defaults and validates.
    pub fn resolve(file: &Overrides, flags: &Overrides) -> CliResult<Self> {
        let mut c = Self::default();
        for o in [file, flags] {
            c.tol = o.tol.unwrap_or(c.tol);
            c.cluster_tol = o.cluster_tol.unwrap_or(c.cluster_tol);
            c.nu5 = o.nu5.unwrap_or(c.nu5);
            c.seed = o.seed.unwrap_or(c.seed);
            c.grid = o.grid.unwrap_or(c.grid);
        }
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> CliResult<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        if !(self.cluster_tol > 0.0 && self.cluster_tol.is_finite()) {
            return Err(CliError::Usage(format!(
                "cluster-tol must be positive, got {}",
                self.cluster_tol
            )));
        }
        check_nu5(self.nu5)?;
        if self.grid < 8 {
            return Err(CliError::Usage(format!(
                "grid must be at least 8, got {}",
                self.grid
            )));
        }
        Ok(())
    }
}

pub fn check_nu5(nu5: f64) -> CliResult<()> {
    if nu5 == 0.0 {
        return Err(CliError::Usage("nu5 = 0: not an unfolding of L".into()));
    }
    if !nu5.is_finite() {
        return Err(CliError::Usage(format!("nu5 must be finite, got {nu5}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_is_flags_then_file_then_defaults() {
        let file = Overrides::parse("tol = 1e-8\nseed = 7\n").unwrap();
        let flags = Overrides {
            seed: Some(9),
            ..Default::default()
        };
        let c = RunConfig::resolve(&file, &flags).unwrap();
        assert_eq!(c.tol, 1e-8);
        assert_eq!(c.seed, 9);
        assert_eq!(c.grid, DEFAULT_GRID);
        assert_eq!(c.nu5, resonance_core::DEFAULT_NU5);
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(Overrides::parse("tolerance = 1").is_err());
    }

    #[test]
    fn invalid_values_rejected() {
        let bad = [
            Overrides {
                nu5: Some(0.0),
                ..Default::default()
            },
            Overrides {
                tol: Some(-1.0),
                ..Default::default()
            },
            Overrides {
                grid: Some(4),
                ..Default::default()
            },
        ];
        for b in bad {
            assert!(matches!(
                RunConfig::resolve(&Overrides::default(), &b),
                Err(CliError::Usage(_))
            ));
        }
    }
}
