//! Engine configuration, read from a TOML file.
//!
//! ```toml
//! damping = 0.85
//! alpha = 0.5
//! shortlist.min_expansion_hits = 2
//! extraction.top_k = 5
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::extraction::ExtractionConfig;
use crate::retrieval::RetrievalConfig;

/// Environment variable naming the config file.
pub const CONFIG_ENV: &str = "ONTOCLIR_CONFIG";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid config: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Config {
    #[serde(flatten)]
    pub retrieval: RetrievalConfig,
    pub extraction: ExtractionConfig,
    /// Threads used by batch evaluation.
    pub workers: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { retrieval: RetrievalConfig::default(), extraction: ExtractionConfig::default(), workers: 4 }
    }
}

impl Config {
    pub fn from_toml(source: &str) -> Result<Self, ConfigError> {
        let config: Config = toml::from_str(source)?;
        config.validate()?;
        Ok(config)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        let source = std::fs::read_to_string(path)
            .map_err(|source| ConfigError::Io { path: path.display().to_string(), source })?;
        Self::from_toml(&source)
    }

    /// Reads `path` (if any) and applies `key=value` overrides on top.
    /// Override values use TOML syntax; bare words are taken as strings.
    pub fn load(path: Option<&Path>, overrides: &[String]) -> Result<Self, ConfigError> {
        let mut table = match path {
            Some(p) => {
                let source = std::fs::read_to_string(p)
                    .map_err(|source| ConfigError::Io { path: p.display().to_string(), source })?;
                source.parse::<toml::Table>()?
            }
            None => toml::Table::new(),
        };
        for raw in overrides {
            let (key, value) = raw
                .split_once('=')
                .ok_or_else(|| ConfigError::Invalid(format!("override `{raw}` is not key=value")))?;
            let fragment = format!("{} = {}", key.trim(), value.trim());
            let parsed = fragment
                .parse::<toml::Table>()
                .or_else(|_| format!("{} = {:?}", key.trim(), value.trim()).parse::<toml::Table>())?;
            merge(&mut table, parsed);
        }
        let config: Config = toml::Value::Table(table).try_into()?;
        config.validate()?;
        Ok(config)
    }

    /// Loads the file named by `ONTOCLIR_CONFIG`, or defaults when unset.
    pub fn from_env() -> Result<Self, ConfigError> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => Self::from_file(Path::new(&path)),
            None => Ok(Config::default()),
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let r = &self.retrieval;
        let invalid = |msg: &str| Err(ConfigError::Invalid(msg.to_owned()));
        if !(r.damping > 0.0 && r.damping < 1.0) {
            return invalid("damping must lie in (0, 1)");
        }
        if r.epsilon.is_nan() || r.epsilon <= 0.0 || r.max_iter == 0 {
            return invalid("epsilon must be positive and max_iter at least 1");
        }
        if !(0.0..=1.0).contains(&r.alpha) {
            return invalid("alpha must lie in [0, 1]");
        }
        if r.expansion_weight.is_nan() || r.expansion_weight < 0.0 {
            return invalid("expansion_weight must be non-negative");
        }
        let e = &self.extraction;
        if e.top_k == 0 || e.max_passages == 0 {
            return invalid("extraction.top_k and extraction.max_passages must be at least 1");
        }
        if !(e.jaccard_threshold > 0.0 && e.jaccard_threshold <= 1.0) {
            return invalid("extraction.jaccard_threshold must lie in (0, 1]");
        }
        Ok(())
    }
}

fn merge(into: &mut toml::Table, from: toml::Table) {
    for (key, value) in from {
        match (into.get_mut(&key), value) {
            (Some(toml::Value::Table(existing)), toml::Value::Table(incoming)) => merge(existing, incoming),
            (_, value) => {
                into.insert(key, value);
            }
        }
    }
}
