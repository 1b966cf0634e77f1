//! Run configuration: defaults, flat `key = value` config files and
//! validation.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use nk6_core::hypersphere::MAX_ABS_R;
use nk6_core::DiffConfig;
use serde::Serialize;

use crate::registry::FAMILIES;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(CliError::Config(format!("unknown format `{other}` (expected json, csv or text)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub r_values: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
    pub h1: f64,
    pub h2: f64,
    /// Keyed by full check id (`axioms.induced`) or family (`axioms`).
    pub tolerances: BTreeMap<String, f64>,
    pub out: Option<PathBuf>,
    pub format: Format,
    /// `None` runs every family.
    pub checks: Option<Vec<String>>,
}

impl Default for RunConfig {
    fn default() -> Self {
        let d = DiffConfig::default();
        RunConfig {
            r_values: vec![-0.6, 0.0, 0.6, std::f64::consts::FRAC_1_SQRT_2],
            samples: 500,
            seed: 42,
            h1: d.h1,
            h2: d.h2,
            tolerances: BTreeMap::new(),
            out: None,
            format: Format::Json,
            checks: None,
        }
    }
}

/// The part of a [`RunConfig`] that determines report contents. Echoed
/// into JSON reports.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho<'a> {
    pub r_values: &'a [f64],
    pub samples: usize,
    pub seed: u64,
    pub h1: f64,
    pub h2: f64,
    pub tolerances: &'a BTreeMap<String, f64>,
    pub checks: Option<&'a [String]>,
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value.trim().parse().map_err(|_| CliError::Config(format!("invalid value `{}` for `{key}`", value.trim())))
}

pub fn parse_r_list(value: &str) -> Result<Vec<f64>, CliError> {
    value.split(',').map(|v| parse_num("r", v)).collect()
}

fn parse_list(value: &str) -> Vec<String> {
    value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()
}

/// Parses `id=value` tolerance overrides as given on the command line.
pub fn parse_tolerance(spec: &str) -> Result<(String, f64), CliError> {
    let (id, v) = spec
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("tolerance override `{spec}` is not of the form id=value")))?;
    Ok((id.trim().to_string(), parse_num(id.trim(), v)?))
}

impl RunConfig {
    pub fn echo(&self) -> ConfigEcho<'_> {
        ConfigEcho {
            r_values: &self.r_values,
            samples: self.samples,
            seed: self.seed,
            h1: self.h1,
            h2: self.h2,
            tolerances: &self.tolerances,
            checks: self.checks.as_deref(),
        }
    }

    pub fn diff(&self) -> DiffConfig {
        DiffConfig { h1: self.h1, h2: self.h2 }
    }

    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "r" | "r_values" => self.r_values = parse_r_list(value)?,
            "samples" => self.samples = parse_num(key, value)?,
            "seed" => self.seed = parse_num(key, value)?,
            "h1" => self.h1 = parse_num(key, value)?,
            "h2" => self.h2 = parse_num(key, value)?,
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value.trim())),
            "check" | "checks" => self.checks = Some(parse_list(value)),
            _ => match key.strip_prefix("tol.") {
                Some(id) if !id.is_empty() => {
                    self.tolerances.insert(id.to_string(), parse_num(key, value)?);
                }
                _ => return Err(CliError::Config(format!("unknown config key `{key}`"))),
            },
        }
        Ok(())
    }

    /// Reads a flat config file. Blank lines and `#` comments are skipped.
    pub fn merge_str(&mut self, text: &str) -> Result<(), CliError> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", lineno + 1)))?;
            self.set(key.trim(), value)?;
        }
        Ok(())
    }

    pub fn merge_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        self.merge_str(&text)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.samples == 0 {
            return Err(CliError::Config("samples must be at least 1".into()));
        }
        if self.r_values.is_empty() {
            return Err(CliError::Config("no r values given".into()));
        }
        for &r in &self.r_values {
            if r.is_nan() || r.abs() >= MAX_ABS_R {
                return Err(CliError::Config(format!("r = {r} is outside (-{MAX_ABS_R}, {MAX_ABS_R})")));
            }
        }
        self.diff().validate().map_err(|e| CliError::Config(e.to_string()))?;
        if let Some(checks) = &self.checks {
            if checks.is_empty() {
                return Err(CliError::Config("empty check list".into()));
            }
            for c in checks {
                if !FAMILIES.contains(&c.as_str()) {
                    return Err(CliError::Config(format!("unknown check `{c}` (known: {})", FAMILIES.join(", "))));
                }
            }
        }
        for (id, tol) in &self.tolerances {
            if !tol.is_finite() || *tol < 0.0 {
                return Err(CliError::Config(format!("tolerance for `{id}` must be finite and non-negative")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides_defaults() {
        let mut cfg = RunConfig::default();
        cfg.merge_str(
            "# comment\n r = -0.5, 0.25 \nsamples=10\nseed = 7\nh1 = 2e-5\nformat = csv\ncheck = axioms, hopf\ntol.nearly_kahler = 1e-20\n",
        )
        .unwrap();
        assert_eq!(cfg.r_values, vec![-0.5, 0.25]);
        assert_eq!(cfg.samples, 10);
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.h1, 2e-5);
        assert_eq!(cfg.format, Format::Csv);
        assert_eq!(cfg.checks.as_deref(), Some(&["axioms".to_string(), "hopf".to_string()][..]));
        assert_eq!(cfg.tolerances["nearly_kahler"], 1e-20);
        cfg.validate().unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        let mut cfg = RunConfig::default();
        assert!(cfg.merge_str("bogus = 1").is_err());
        assert!(cfg.merge_str("samples = -3").is_err());
        assert!(cfg.merge_str("just text").is_err());
        cfg.samples = 0;
        assert!(cfg.validate().is_err());
        let cfg = RunConfig { r_values: vec![0.995], ..RunConfig::default() };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig { checks: Some(vec!["nope".into()]), ..RunConfig::default() };
        assert!(cfg.validate().is_err());
        let cfg = RunConfig { h1: 0.0, ..RunConfig::default() };
        assert!(cfg.validate().is_err());
    }
}
