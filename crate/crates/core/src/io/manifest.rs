use serde::{Deserialize, Serialize};

use crate::harness::{ExperimentResult, GraphProvenance};

use super::ConfigFile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellSeed {
    pub group: String,
    pub policy: String,
    pub start_node: u64,
    pub repetition: usize,
    pub seed: u64,
}

/// Everything needed to reproduce a result directory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub config: ConfigFile,
    pub graphs: Vec<GraphProvenance>,
    pub nodes: Vec<usize>,
    pub curves: usize,
    pub walks: u64,
    pub cap_hits: u64,
    pub cells: Vec<CellSeed>,
    /// Seconds since the Unix epoch when the run started.
    pub started_at: u64,
    pub wall_time_secs: f64,
}

impl Manifest {
    pub fn new(command: &str, config: ConfigFile, results: &[&ExperimentResult]) -> Self {
        let cells = results
            .iter()
            .flat_map(|r| r.curves.iter())
            .map(|c| CellSeed {
                group: c.group.clone(),
                policy: c.policy.name().to_string(),
                start_node: c.start_label,
                repetition: c.repetition,
                seed: c.seed,
            })
            .collect();
        Manifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            config,
            graphs: results.iter().map(|r| r.provenance.clone()).collect(),
            nodes: results.iter().map(|r| r.nodes).collect(),
            curves: results.iter().map(|r| r.curves.len()).sum(),
            walks: results.iter().map(|r| r.walks()).sum(),
            cap_hits: results.iter().map(|r| r.cap_hits()).sum(),
            cells,
            started_at: 0,
            wall_time_secs: 0.0,
        }
    }

    pub fn to_json(&self) -> Result<String, serde_json::Error> {
        serde_json::to_string_pretty(self)
    }
}
