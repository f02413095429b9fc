//! Runtime configuration with precedence flags > environment (`SCX_`
//! prefix) > config file (`scx.toml`) > defaults.

use serde::Deserialize;

use scx_core::Caps;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Config {
    pub brute_cap_bits: u32,
    pub coset_cap_bits: u32,
    pub eig_tol: f64,
    pub zero_band: f64,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            brute_cap_bits: 24,
            coset_cap_bits: 20,
            eig_tol: scx_core::DEFAULT_EIG_TOL,
            zero_band: scx_core::DEFAULT_ZERO_BAND,
            seed: 7,
        }
    }
}

/// One layer of overrides; later layers win field by field.
#[derive(Clone, Debug, Default, Deserialize)]
pub struct ConfigOverlay {
    pub brute_cap_bits: Option<u32>,
    pub coset_cap_bits: Option<u32>,
    pub eig_tol: Option<f64>,
    pub zero_band: Option<f64>,
    pub seed: Option<u64>,
}

impl Config {
    pub fn caps(&self) -> Caps {
        Caps {
            brute_cap_bits: self.brute_cap_bits,
            coset_cap_bits: self.coset_cap_bits,
        }
    }

    pub fn apply(&mut self, overlay: &ConfigOverlay) {
        if let Some(v) = overlay.brute_cap_bits {
            self.brute_cap_bits = v;
        }
        if let Some(v) = overlay.coset_cap_bits {
            self.coset_cap_bits = v;
        }
        if let Some(v) = overlay.eig_tol {
            self.eig_tol = v;
        }
        if let Some(v) = overlay.zero_band {
            self.zero_band = v;
        }
        if let Some(v) = overlay.seed {
            self.seed = v;
        }
    }

    /// Resolves the effective configuration. `file` falls back to
    /// `./scx.toml` when unset (missing files are fine, parse errors are
    /// not); `flags` is the highest-precedence layer.
    pub fn resolve(
        file: Option<&std::path::Path>,
        flags: &ConfigOverlay,
    ) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        let path = file.map(std::path::Path::to_path_buf).or_else(|| {
            let p = std::path::PathBuf::from("scx.toml");
            p.exists().then_some(p)
        });
        if let Some(p) = path {
            let text = std::fs::read_to_string(&p)
                .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            let overlay: ConfigOverlay = toml::from_str(&text)
                .map_err(|e| CliError::Validation(format!("{}: {e}", p.display())))?;
            cfg.apply(&overlay);
        }
        cfg.apply(&env_overlay()?);
        cfg.apply(flags);
        Ok(cfg)
    }
}

fn env_overlay() -> Result<ConfigOverlay, CliError> {
    fn get<T: std::str::FromStr>(key: &str) -> Result<Option<T>, CliError> {
        match std::env::var(key) {
            Ok(v) => v
                .parse()
                .map(Some)
                .map_err(|_| CliError::Validation(format!("bad value for {key}: {v}"))),
            Err(_) => Ok(None),
        }
    }
    Ok(ConfigOverlay {
        brute_cap_bits: get("SCX_BRUTE_CAP_BITS")?,
        coset_cap_bits: get("SCX_COSET_CAP_BITS")?,
        eig_tol: get("SCX_EIG_TOL")?,
        zero_band: get("SCX_ZERO_BAND")?,
        seed: get("SCX_SEED")?,
    })
}
