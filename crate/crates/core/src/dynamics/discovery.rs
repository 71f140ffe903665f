use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::Rng;

use super::walk::Walker;
use super::{BrainState, DynamicsError, Termination, WalkPolicy};
use crate::graph::{Graph, NodeId};

/// 1%, 2%, ..., 100%.
pub fn default_thresholds() -> Vec<f64> {
    (1..=100).map(|i| i as f64 / 100.0).collect()
}

fn check_thresholds(thresholds: &[f64]) -> Result<(), DynamicsError> {
    let in_range = thresholds.iter().all(|&t| t > 0.0 && t <= 1.0);
    let increasing = thresholds.windows(2).all(|w| w[0] < w[1]);
    if thresholds.is_empty() || !in_range || !increasing {
        return Err(DynamicsError::InvalidThresholds(thresholds.to_vec()));
    }
    Ok(())
}

/// Smallest known-node count that reaches fraction `t` of `n`.
fn required_count(t: f64, n: usize) -> usize {
    ((t * n as f64) - 1e-9).ceil().max(1.0) as usize
}

/// Cumulative steps at which each coverage threshold was first reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LearningCurve {
    thresholds: Vec<u64>,
    steps: Vec<u64>,
}

// Thresholds are stored as f64 bit patterns so the curve can be Eq.
impl LearningCurve {
    pub(crate) fn new(thresholds: &[f64], steps: Vec<u64>) -> Self {
        debug_assert_eq!(thresholds.len(), steps.len());
        LearningCurve {
            thresholds: thresholds.iter().map(|t| t.to_bits()).collect(),
            steps,
        }
    }

    pub fn thresholds(&self) -> Vec<f64> {
        self.thresholds.iter().map(|&b| f64::from_bits(b)).collect()
    }

    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `(threshold, steps)` pairs in threshold order.
    pub fn crossings(&self) -> impl Iterator<Item = (f64, u64)> + '_ {
        self.thresholds.iter().map(|&b| f64::from_bits(b)).zip(self.steps.iter().copied())
    }

    /// Steps at the grid threshold closest to `fraction`.
    pub fn steps_at(&self, fraction: f64) -> Option<u64> {
        self.crossings()
            .min_by(|a, b| (a.0 - fraction).abs().total_cmp(&(b.0 - fraction).abs()))
            .filter(|(t, _)| (t - fraction).abs() < 1e-9)
            .map(|(_, s)| s)
    }

    pub fn same_grid(&self, other: &LearningCurve) -> bool {
        self.thresholds == other.thresholds
    }
}

/// Outcome of walking from one brain until it knows the whole graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscoveryRun {
    pub curve: LearningCurve,
    pub brain: BrainState,
    /// Walks stopped by the step cap.
    pub cap_hits: u64,
    pub dead_ends: u64,
}

/// Nodes that some walk from `brain` can teach the brain about, given the
/// policy's costs and the step cap.
///
/// A node is entered along its cheapest path, which never revisits a node
/// nor passes a neighbour of an earlier path node, so it is a legal walk
/// under every policy. Leaving a node needs its arrival cost below the cap
/// (the brain itself can always be left). Priming policies also learn the
/// neighbours of every node they can leave.
pub fn learnable_nodes(g: &Graph, brain: NodeId, policy: WalkPolicy, step_cap: Option<u64>) -> Vec<bool> {
    let n = g.node_count();
    let weight = |v: NodeId| match policy {
        WalkPolicy::Standard => 1,
        _ => g.degree(v) as u64,
    };
    let mut cost = vec![u64::MAX; n];
    let mut learnable = vec![false; n];
    let mut heap = BinaryHeap::new();
    cost[brain] = if policy == WalkPolicy::Standard { 0 } else { weight(brain) };
    heap.push(Reverse((cost[brain], brain)));
    while let Some(Reverse((c, u))) = heap.pop() {
        if c > cost[u] {
            continue;
        }
        learnable[u] = true;
        let can_leave = u == brain || step_cap.is_none_or(|cap| c < cap);
        if !can_leave {
            continue;
        }
        for &w in g.neighbors(u) {
            if policy.primes_neighbors() {
                learnable[w] = true;
            }
            let next = c + weight(w);
            if next < cost[w] {
                cost[w] = next;
                heap.push(Reverse((next, w)));
            }
        }
    }
    learnable
}

/// Repeats walks from `brain` until every node of `g` is known.
///
/// Fails up front if some node can never be learned (a disconnected graph,
/// or a step cap too small to reach it); otherwise every walk has a positive
/// chance of teaching the brain something new and the run ends with
/// probability 1.
pub fn run_discovery<R: Rng + ?Sized>(
    g: &Graph,
    brain: NodeId,
    policy: WalkPolicy,
    step_cap: Option<u64>,
    thresholds: &[f64],
    rng: &mut R,
) -> Result<DiscoveryRun, DynamicsError> {
    let n = g.node_count();
    if brain >= n {
        return Err(DynamicsError::BrainOutOfRange { brain, n });
    }
    check_thresholds(thresholds)?;
    let required: Vec<usize> = thresholds.iter().map(|&t| required_count(t, n)).collect();
    let learnable = learnable_nodes(g, brain, policy, step_cap).into_iter().filter(|&l| l).count();
    if learnable < n {
        return Err(DynamicsError::Unlearnable { brain, learnable, n });
    }

    let mut state = BrainState::new(brain, n);
    let mut walker = Walker::new(g, policy, step_cap);
    let mut steps = vec![0u64; thresholds.len()];
    let mut next = 0;
    let mut cap_hits = 0;
    let mut dead_ends = 0;

    while !state.is_complete() {
        let base = state.cumulative_steps;
        let summary = walker.walk_observed(&mut state, rng, |known, walk_steps| {
            while next < required.len() && known >= required[next] {
                steps[next] = base + walk_steps;
                next += 1;
            }
        });
        match summary.terminated_by {
            Termination::StepCap => cap_hits += 1,
            Termination::DeadEnd => dead_ends += 1,
            Termination::FullCoverage => {}
        }
    }
    debug_assert_eq!(next, required.len());

    Ok(DiscoveryRun {
        curve: LearningCurve::new(thresholds, steps),
        brain: state,
        cap_hits,
        dead_ends,
    })
}
