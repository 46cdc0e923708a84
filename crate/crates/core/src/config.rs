//! Configuration: a `key = value` text file, overridable by environment and
//! command-line flags (flag > env > file > default).

use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::Error;
use crate::numerals::Natural;
use crate::search::DEFAULT_PROGRESS_INTERVAL;

/// Environment variable overriding the cache path; the only environment
/// coupling this crate has.
pub const CACHE_ENV_VAR: &str = "ARCHIVE_LABEL_CACHE";

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Where the result cache lives; `None` disables caching.
    pub cache_path: Option<PathBuf>,
    /// Overrides the per-sticker default search bound when set.
    pub default_bound_override: Option<Natural>,
    /// Progress cadence in `f`-evaluations.
    pub progress_interval: u64,
    /// Whether long-running jobs (table cells behind --long) run by default.
    pub long_jobs_enabled: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cache_path: None,
            default_bound_override: None,
            progress_interval: DEFAULT_PROGRESS_INTERVAL,
            long_jobs_enabled: false,
        }
    }
}

impl Config {
    /// Parse a config file. Blank lines and `#` comments are allowed;
    /// unknown keys are errors so typos do not silently disable settings.
    pub fn from_file(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: &str| Error::Config {
                line: lineno + 1,
                reason: reason.to_string(),
            };
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value"))?;
            let key = key.trim();
            let value = value.trim();
            match key {
                "cache_path" => cfg.cache_path = Some(PathBuf::from(value)),
                "default_bound_override" => {
                    cfg.default_bound_override = Some(
                        parse_natural(value).ok_or_else(|| err("expected a nonnegative integer"))?,
                    )
                }
                "progress_interval" => {
                    cfg.progress_interval = value
                        .parse::<u64>()
                        .ok()
                        .filter(|&v| v > 0)
                        .ok_or_else(|| err("expected a positive integer"))?
                }
                "long_jobs_enabled" => {
                    cfg.long_jobs_enabled = match value {
                        "true" | "1" => true,
                        "false" | "0" => false,
                        _ => return Err(err("expected true or false")),
                    }
                }
                _ => return Err(err(&format!("unknown key {key:?}"))),
            }
        }
        Ok(cfg)
    }

    /// Apply the environment layer (cache path only).
    pub fn apply_env(&mut self) {
        if let Ok(path) = std::env::var(CACHE_ENV_VAR) {
            if !path.is_empty() {
                self.cache_path = Some(PathBuf::from(path));
            }
        }
    }
}

/// Accept plain decimal or the `B^E` power shorthand ("2^4200"), which keeps
/// huge bounds typeable.
pub fn parse_natural(text: &str) -> Option<Natural> {
    if let Some((base, exp)) = text.split_once('^') {
        let b = Natural::from_str(base.trim()).ok()?;
        let e = exp.trim().parse::<u32>().ok()?;
        return Some(b.pow(e));
    }
    Natural::from_str(text.trim()).ok()
}
