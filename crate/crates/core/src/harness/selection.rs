use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::centrality::{betweenness, nodes_at_or_above_percentile};
use crate::graph::{Graph, NodeId};

/// At most this many starts are drawn above a betweenness percentile.
pub const PERCENTILE_SAMPLE_CAP: usize = 100;

/// How brain nodes are chosen for an experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StartSelection {
    /// Every `stride`-th node of the degree ranking, starting with the top.
    DegreeRankedStride { stride: usize },
    /// Uniform sample (at most 100) of the nodes whose betweenness is at or
    /// above the given empirical percentile.
    BetweennessPercentile { min_percentile: f64 },
    /// The `count` highest-degree nodes.
    TopHubs { count: usize },
    /// Listed nodes. Labels as they appear in the input edge list when the
    /// graph was ingested.
    Explicit { nodes: Vec<u64> },
}

impl StartSelection {
    pub fn describe(&self) -> String {
        match self {
            StartSelection::DegreeRankedStride { stride } => format!("degree-ranked stride {stride}"),
            StartSelection::BetweennessPercentile { min_percentile } => {
                format!("betweenness >= percentile {min_percentile}")
            }
            StartSelection::TopHubs { count } => format!("top {count} hubs"),
            StartSelection::Explicit { nodes } => format!("explicit {nodes:?}"),
        }
    }
}

/// Chooses brain nodes. `Explicit` entries are taken as node ids here; the
/// experiment runner translates labels before calling this.
pub fn select_starts<R: Rng + ?Sized>(g: &Graph, sel: &StartSelection, rng: &mut R) -> Result<Vec<NodeId>, HarnessError> {
    let n = g.node_count();
    let starts: Vec<NodeId> = match sel {
        StartSelection::DegreeRankedStride { stride } => {
            if *stride == 0 {
                return Err(HarnessError::Config("stride must be positive".into()));
            }
            g.degree_ranked_nodes().into_iter().step_by(*stride).collect()
        }
        StartSelection::TopHubs { count } => {
            if *count > n {
                return Err(HarnessError::Config(format!("{count} hubs requested from {n} nodes")));
            }
            g.degree_ranked_nodes().into_iter().take(*count).collect()
        }
        StartSelection::BetweennessPercentile { min_percentile } => {
            if !(0.0..=1.0).contains(min_percentile) {
                return Err(HarnessError::Config(format!("percentile {min_percentile} outside [0, 1]")));
            }
            let bc = betweenness::<f64>(g);
            let eligible = nodes_at_or_above_percentile(&bc, *min_percentile);
            if eligible.len() <= PERCENTILE_SAMPLE_CAP {
                eligible
            } else {
                let mut picked: Vec<NodeId> = index::sample(rng, eligible.len(), PERCENTILE_SAMPLE_CAP)
                    .into_iter()
                    .map(|i| eligible[i])
                    .collect();
                picked.sort_unstable();
                picked
            }
        }
        StartSelection::Explicit { nodes } => {
            let mut out = Vec::with_capacity(nodes.len());
            for &v in nodes {
                let v = v as usize;
                if v >= n {
                    return Err(HarnessError::Config(format!("start node {v} outside graph of {n} nodes")));
                }
                out.push(v);
            }
            out
        }
    };
    if starts.is_empty() {
        return Err(HarnessError::EmptySelection(sel.describe()));
    }
    Ok(starts)
}
