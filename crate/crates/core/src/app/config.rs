use std::fmt;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use crate::constants::{PhysicalConstants, ELECTRON_MASS_ROUNDED};
use crate::cycle::CycleConfig;
use crate::error::ParameterError;
use crate::spectrum::WellSpec;
use crate::thermo::{Truncation, DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE, MAX_TOLERANCE};

pub const DEFAULT_ALPHAS: [f64; 4] = [2.0, 1.8, 1.5, 1.2];
pub const DEFAULT_A_MIN_NM: f64 = 0.5;
pub const DEFAULT_A_MAX_NM: f64 = 200.0;
pub const DEFAULT_A_COUNT: usize = 200;
pub const DEFAULT_OUTPUT: &str = "sweep.csv";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
    #[error("{path}: {message}")]
    Range { path: String, message: String },
    #[error("reading {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl ConfigError {
    fn range(path: impl Into<String>, message: impl fmt::Display) -> Self {
        ConfigError::Range {
            path: path.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    #[default]
    Log,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AGrid {
    pub min_nm: f64,
    pub max_nm: f64,
    pub count: usize,
    #[serde(default)]
    pub spacing: Spacing,
}

impl AGrid {
    /// Grid points in nanometres; both endpoints are hit exactly.
    pub fn points_nm(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min_nm];
        }
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == 0 {
                    return self.min_nm;
                }
                if i == self.count - 1 {
                    return self.max_nm;
                }
                let t = i as f64 / last;
                match self.spacing {
                    Spacing::Linear => self.min_nm + t * (self.max_nm - self.min_nm),
                    Spacing::Log => (self.min_nm.ln() + t * (self.max_nm.ln() - self.min_nm.ln())).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    mass_kg: Option<f64>,
    chi: Option<f64>,
    t_hot_k: Option<f64>,
    t_cold_k: Option<f64>,
    tolerance: Option<f64>,
    max_terms: Option<u64>,
    a_grid: Option<AGrid>,
    a_list_nm: Option<Vec<f64>>,
    alpha_list: Option<Vec<f64>>,
    output_path: Option<PathBuf>,
}

/// Everything but the geometry of one cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleTemplate {
    pub mass_kg: f64,
    pub chi: f64,
    pub t_hot_k: f64,
    pub t_cold_k: f64,
    pub tolerance: f64,
    pub max_terms: u64,
    pub constants: PhysicalConstants<f64>,
}

impl Default for CycleTemplate {
    fn default() -> Self {
        Self {
            mass_kg: ELECTRON_MASS_ROUNDED,
            chi: 0.5,
            t_hot_k: 2.0,
            t_cold_k: 1.0,
            tolerance: DEFAULT_TOLERANCE,
            max_terms: DEFAULT_MAX_TERMS,
            constants: PhysicalConstants::si(),
        }
    }
}

impl CycleTemplate {
    pub fn cycle(&self, alpha: f64, a_nm: f64) -> Result<CycleConfig<f64>, ParameterError> {
        let well =
            WellSpec::new(self.mass_kg, alpha, self.chi, a_nm * 1e-9)?.with_constants(self.constants);
        Ok(CycleConfig::new(well, self.t_hot_k, self.t_cold_k)?
            .with_truncation(Truncation::new(self.tolerance, self.max_terms)?))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub base: CycleTemplate,
    pub a_grid_nm: Vec<f64>,
    pub alpha_grid: Vec<f64>,
    pub output_path: PathBuf,
}

impl Default for SweepConfig {
    fn default() -> Self {
        parse_config("{}").expect("defaults are valid")
    }
}

/// Parses a JSON sweep description; absent keys take their defaults.
pub fn parse_config(text: &str) -> Result<SweepConfig, ConfigError> {
    let text = if text.trim().is_empty() { "{}" } else { text };
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(de).map_err(|e| ConfigError::Schema {
        path: match e.path().to_string() {
            p if p == "." => "<document>".to_owned(),
            p => p,
        },
        message: e.inner().to_string(),
    })?;
    build(raw)
}

pub fn load_config(path: &Path) -> Result<SweepConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_config(&text)
}

fn positive(path: &str, value: f64) -> Result<f64, ConfigError> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(ConfigError::range(path, format!("{value} must be finite and > 0")))
    }
}

fn build(raw: RawConfig) -> Result<SweepConfig, ConfigError> {
    let defaults = CycleTemplate::default();
    let mass_kg = positive("mass_kg", raw.mass_kg.unwrap_or(defaults.mass_kg))?;
    let chi = positive("chi", raw.chi.unwrap_or(defaults.chi))?;
    let t_hot_k = positive("t_hot_k", raw.t_hot_k.unwrap_or(defaults.t_hot_k))?;
    let t_cold_k = positive("t_cold_k", raw.t_cold_k.unwrap_or(defaults.t_cold_k))?;
    if t_cold_k > t_hot_k {
        return Err(ConfigError::range(
            "t_cold_k",
            format!("{t_cold_k} exceeds t_hot_k = {t_hot_k}"),
        ));
    }
    let tolerance = raw.tolerance.unwrap_or(defaults.tolerance);
    if !(tolerance > 0.0 && tolerance <= MAX_TOLERANCE) {
        return Err(ConfigError::range("tolerance", format!("{tolerance} outside (0, 1e-6]")));
    }
    let max_terms = raw.max_terms.unwrap_or(defaults.max_terms);
    if max_terms == 0 {
        return Err(ConfigError::range("max_terms", "must be at least 1"));
    }

    let a_grid_nm = match (raw.a_grid, raw.a_list_nm) {
        (Some(_), Some(_)) => {
            return Err(ConfigError::range("a_list_nm", "give either a_grid or a_list_nm, not both"))
        }
        (Some(grid), None) => {
            positive("a_grid.min_nm", grid.min_nm)?;
            positive("a_grid.max_nm", grid.max_nm)?;
            if grid.max_nm < grid.min_nm {
                return Err(ConfigError::range("a_grid.max_nm", "must not be below min_nm"));
            }
            if grid.count == 0 {
                return Err(ConfigError::range("a_grid.count", "must be at least 1"));
            }
            grid.points_nm()
        }
        (None, Some(list)) => {
            if list.is_empty() {
                return Err(ConfigError::range("a_list_nm", "must not be empty"));
            }
            for (i, &a) in list.iter().enumerate() {
                positive(&format!("a_list_nm[{i}]"), a)?;
            }
            list
        }
        (None, None) => AGrid {
            min_nm: DEFAULT_A_MIN_NM,
            max_nm: DEFAULT_A_MAX_NM,
            count: DEFAULT_A_COUNT,
            spacing: Spacing::Log,
        }
        .points_nm(),
    };

    let alpha_grid = raw.alpha_list.unwrap_or_else(|| DEFAULT_ALPHAS.to_vec());
    if alpha_grid.is_empty() {
        return Err(ConfigError::range("alpha_list", "must not be empty"));
    }
    for (i, &alpha) in alpha_grid.iter().enumerate() {
        if !(alpha.is_finite() && alpha > 0.0 && alpha <= 2.0) {
            return Err(ConfigError::range(
                format!("alpha_list[{i}]"),
                format!("{alpha} outside (0, 2]"),
            ));
        }
    }

    Ok(SweepConfig {
        base: CycleTemplate {
            mass_kg,
            chi,
            t_hot_k,
            t_cold_k,
            tolerance,
            max_terms,
            constants: defaults.constants,
        },
        a_grid_nm,
        alpha_grid,
        output_path: raw.output_path.unwrap_or_else(|| PathBuf::from(DEFAULT_OUTPUT)),
    })
}
