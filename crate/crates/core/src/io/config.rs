//! TOML experiment configuration files.
//!
//! A config file is an [`ExperimentConfig`] written out field for field,
//! plus an optional `[sweep]` table for the `sweep` command:
//!
//! ```toml
//! policies = ["standard", "lookahead"]
//! repetitions_per_start = 10
//! master_seed = 2024
//!
//! [graph.generator]
//! model = "er"
//! n = 1000
//! k_avg = 8.0
//! seed = 7
//!
//! [start]
//! kind = "degree_ranked_stride"
//! stride = 50
//!
//! [sweep]
//! axis = "k_avg"
//! values = [4.0, 8.0, 16.0]
//! ```
//!
//! Unknown keys are rejected. TOML integers are signed, so seeds written in
//! a config file must not exceed `i64::MAX`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::dynamics::{default_thresholds, WalkPolicy};
use crate::harness::{ExperimentConfig, GraphSource, StartSelection, SweepAxis};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub policies: Vec<WalkPolicy>,
    pub repetitions_per_start: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step_cap: Option<u64>,
    #[serde(default = "default_thresholds")]
    pub thresholds: Vec<f64>,
    pub master_seed: u64,
    pub graph: GraphSource,
    pub start: StartSelection,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<SweepAxis>,
}

impl ConfigFile {
    pub fn from_experiment(cfg: &ExperimentConfig, sweep: Option<SweepAxis>) -> Self {
        ConfigFile {
            policies: cfg.policies.clone(),
            repetitions_per_start: cfg.repetitions_per_start,
            step_cap: cfg.step_cap,
            thresholds: cfg.thresholds.clone(),
            master_seed: cfg.master_seed,
            graph: cfg.graph.clone(),
            start: cfg.start.clone(),
            sweep,
        }
    }

    pub fn experiment(&self) -> ExperimentConfig {
        ExperimentConfig {
            graph: self.graph.clone(),
            policies: self.policies.clone(),
            start: self.start.clone(),
            repetitions_per_start: self.repetitions_per_start,
            step_cap: self.step_cap,
            thresholds: self.thresholds.clone(),
            master_seed: self.master_seed,
        }
    }

    pub fn parse(text: &str) -> Result<Self, IoError> {
        Ok(toml::from_str(text)?)
    }

    pub fn to_toml(&self) -> Result<String, IoError> {
        Ok(toml::to_string(self)?)
    }

    /// Reads a config; a relative edge-list path is resolved against the
    /// config file's directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Self, IoError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| IoError::Open {
            path: path.to_path_buf(),
            source,
        })?;
        let mut cfg = Self::parse(&text)?;
        if let GraphSource::EdgeList { path: edges } = &mut cfg.graph {
            if edges.is_relative() {
                if let Some(dir) = path.parent() {
                    *edges = dir.join(&*edges);
                }
            }
        }
        Ok(cfg)
    }
}
