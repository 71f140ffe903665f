//! Self-avoiding walks from a fixed brain node.
//!
//! Every walk starts at the brain with a clean agent view. The agent marks
//! nodes as it goes (see [`NodeState`]) and reports what it learns to the
//! [`BrainState`], which keeps knowledge across walks. A discovery run
//! repeats walks until the brain knows every node and records the
//! cumulative cost at which each coverage threshold was first reached.

mod discovery;
mod walk;

pub use discovery::{default_thresholds, learnable_nodes, run_discovery, DiscoveryRun, LearningCurve};
pub use walk::{eligible_moves, policy_step_metric, run_walk, AgentView, Walker};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::NodeId;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("brain node {brain} outside graph of {n} nodes")]
    BrainOutOfRange { brain: NodeId, n: usize },
    #[error("thresholds must be non-empty, strictly increasing and within (0, 1]: {0:?}")]
    InvalidThresholds(Vec<f64>),
    #[error("only {learnable} of {n} nodes can ever be learned from brain {brain}; is the graph connected and the step cap large enough?")]
    Unlearnable { brain: NodeId, learnable: usize, n: usize },
}

/// How the agent regards a node during one walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeState {
    Unvisited,
    /// Known to the agent as a neighbour of its path, not visited.
    Primed,
    /// Visited earlier in this walk; never re-entered.
    Blocked,
    Current,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkPolicy {
    /// Knows only visited nodes; every move costs one step.
    Standard,
    /// Also knows the neighbours of departed nodes, may still enter them;
    /// a walk costs the degree sum of its path.
    Extended,
    /// As `Extended`, but never enters a node it already knows of.
    LookAhead,
}

impl WalkPolicy {
    pub const ALL: [WalkPolicy; 3] = [WalkPolicy::Standard, WalkPolicy::Extended, WalkPolicy::LookAhead];

    pub fn name(self) -> &'static str {
        match self {
            WalkPolicy::Standard => "standard",
            WalkPolicy::Extended => "extended",
            WalkPolicy::LookAhead => "lookahead",
        }
    }

    /// Whether departing a node reveals its neighbours.
    pub fn primes_neighbors(self) -> bool {
        !matches!(self, WalkPolicy::Standard)
    }
}

impl fmt::Display for WalkPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WalkPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(WalkPolicy::Standard),
            "extended" => Ok(WalkPolicy::Extended),
            "lookahead" | "look-ahead" | "look_ahead" => Ok(WalkPolicy::LookAhead),
            _ => Err(format!("unknown policy '{s}' (expected standard, extended or lookahead)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Termination {
    DeadEnd,
    StepCap,
    FullCoverage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkOutcome {
    /// Starts at the brain; no repeats.
    pub visited_path: Vec<NodeId>,
    /// Nodes this walk added to the brain's knowledge, in discovery order.
    pub newly_known: Vec<NodeId>,
    pub steps: u64,
    pub terminated_by: Termination,
}

/// Knowledge accumulated at the brain across walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrainState {
    brain: NodeId,
    known: Vec<bool>,
    known_count: usize,
    pub cumulative_steps: u64,
    pub walk_count: u64,
}

impl BrainState {
    pub fn new(brain: NodeId, n: usize) -> Self {
        BrainState {
            brain,
            known: vec![false; n],
            known_count: 0,
            cumulative_steps: 0,
            walk_count: 0,
        }
    }

    pub fn brain(&self) -> NodeId {
        self.brain
    }

    pub fn knows(&self, v: NodeId) -> bool {
        self.known[v]
    }

    pub fn known_count(&self) -> usize {
        self.known_count
    }

    pub fn node_count(&self) -> usize {
        self.known.len()
    }

    pub fn is_complete(&self) -> bool {
        self.known_count == self.known.len()
    }

    pub fn known_fraction(&self) -> f64 {
        self.known_count as f64 / self.known.len() as f64
    }

    pub fn known_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.known.iter().enumerate().filter(|(_, &k)| k).map(|(v, _)| v)
    }

    /// Returns true if `v` was new.
    pub(crate) fn learn(&mut self, v: NodeId) -> bool {
        if self.known[v] {
            return false;
        }
        self.known[v] = true;
        self.known_count += 1;
        true
    }
}
