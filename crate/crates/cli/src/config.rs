//! Plain-text `key=value` configuration files mirroring the CLI flags.
//! Explicit flags always win over file values.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

use spreadopt::{Result, SpreadError};

/// Parsed configuration file: lowercase keys, raw string values.
#[derive(Debug, Clone, Default)]
pub struct ConfigMap {
    values: HashMap<String, String>,
}

impl ConfigMap {
    /// Reads `key = value` lines; `#` starts a comment, blank lines are
    /// skipped.
    pub fn load(path: &Path) -> Result<ConfigMap> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            SpreadError::Config(format!("cannot read config file {}: {e}", path.display()))
        })?;
        let mut values = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                SpreadError::Config(format!(
                    "config line {} is not key=value: '{raw}'",
                    lineno + 1
                ))
            })?;
            values.insert(key.trim().to_ascii_lowercase(), value.trim().to_string());
        }
        Ok(ConfigMap { values })
    }

    /// Typed lookup; a malformed value is a config error.
    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw.parse::<T>().map(Some).map_err(|_| {
                SpreadError::Config(format!("config key '{key}' has invalid value '{raw}'"))
            }),
        }
    }

    pub fn get_raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }
}

/// Flag-wins-over-file merge.
pub fn merged<T: FromStr>(flag: Option<T>, cfg: &ConfigMap, key: &str) -> Result<Option<T>> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => cfg.get(key),
    }
}
