//! Flat `key = value` configuration file.
//!
//! Recognised keys:
//!
//! | key | meaning |
//! |---|---|
//! | `tolerance.<ID>` | tolerance override for a numeric case, in (0, 1) |
//! | `max_terms` | series term budget, 1..=10⁸ |
//! | `max_order` | cap on cyclotomic orders, 1..=10⁴ |
//! | `format` | `json` or `text` |
//! | `jobs` | worker threads, 1..=1024 |
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::path::Path;

use crate::CliError;

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "PDEDEKIND_CONFIG";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Default)]
pub struct CliConfig {
    pub tolerances: BTreeMap<String, f64>,
    pub max_terms: Option<usize>,
    pub max_order: Option<u32>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
}

fn usage(msg: String) -> CliError {
    CliError::Usage(msg)
}

pub fn check_tolerance(id: &str, t: f64) -> Result<f64, CliError> {
    if t > 0.0 && t < 1.0 {
        Ok(t)
    } else {
        Err(usage(format!("tolerance for {id} must lie in (0, 1), got {t}")))
    }
}

pub fn check_max_terms(n: usize) -> Result<usize, CliError> {
    if (1..=100_000_000).contains(&n) {
        Ok(n)
    } else {
        Err(usage(format!("max_terms must lie in 1..=100000000, got {n}")))
    }
}

pub fn check_max_order(n: u32) -> Result<u32, CliError> {
    if (1..=10_000).contains(&n) {
        Ok(n)
    } else {
        Err(usage(format!("max_order must lie in 1..=10000, got {n}")))
    }
}

pub fn check_jobs(n: usize) -> Result<usize, CliError> {
    if (1..=1024).contains(&n) {
        Ok(n)
    } else {
        Err(usage(format!("jobs must lie in 1..=1024, got {n}")))
    }
}

fn num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| usage(format!("config key `{key}` has an unreadable value `{v}`")))
}

impl CliConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut cfg = CliConfig::default();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("config line {} is not `key = value`: {line}", no + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "max_terms" => cfg.max_terms = Some(check_max_terms(num(key, value)?)?),
                "max_order" => cfg.max_order = Some(check_max_order(num(key, value)?)?),
                "jobs" => cfg.jobs = Some(check_jobs(num(key, value)?)?),
                "format" => {
                    cfg.format = Some(match value {
                        "json" => Format::Json,
                        "text" => Format::Text,
                        _ => return Err(usage(format!("config key `format` must be json or text, got `{value}`"))),
                    })
                }
                _ => match key.strip_prefix("tolerance.") {
                    Some(id) if !id.is_empty() => {
                        cfg.tolerances.insert(id.to_string(), check_tolerance(id, num(key, value)?)?);
                    }
                    _ => return Err(usage(format!("unknown config key `{key}`"))),
                },
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read config file {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The file named by [`CONFIG_ENV`], or the defaults when it is unset.
    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_key() {
        let cfg = CliConfig::parse("# c\nmax_terms = 5000\nmax_order=120\nformat=json\njobs = 2\ntolerance.N1 = 1e-6\n").unwrap();
        assert_eq!(cfg.max_terms, Some(5000));
        assert_eq!(cfg.max_order, Some(120));
        assert_eq!(cfg.format, Some(Format::Json));
        assert_eq!(cfg.jobs, Some(2));
        assert_eq!(cfg.tolerances["N1"], 1e-6);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(CliConfig::parse("max_terms = 0").is_err());
        assert!(CliConfig::parse("tolerance.N1 = 2").is_err());
        assert!(CliConfig::parse("colour = red").is_err());
        assert!(CliConfig::parse("format").is_err());
    }
}
