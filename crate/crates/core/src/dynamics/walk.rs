use rand::Rng;

use super::{BrainState, NodeState, Termination, WalkOutcome, WalkPolicy};
use crate::graph::{Graph, NodeId};

/// Per-walk node states. Resetting is O(1): states are stamped with the
/// walk's epoch and anything stamped earlier reads as `Unvisited`.
#[derive(Debug, Clone)]
pub struct AgentView {
    epoch: u32,
    stamp: Vec<u32>,
    state: Vec<NodeState>,
}

impl AgentView {
    pub fn new(n: usize) -> Self {
        AgentView {
            epoch: 1,
            stamp: vec![0; n],
            state: vec![NodeState::Unvisited; n],
        }
    }

    pub fn reset(&mut self) {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
    }

    pub fn state(&self, v: NodeId) -> NodeState {
        if self.stamp[v] == self.epoch {
            self.state[v]
        } else {
            NodeState::Unvisited
        }
    }

    pub fn set(&mut self, v: NodeId, s: NodeState) {
        self.stamp[v] = self.epoch;
        self.state[v] = s;
    }
}

fn is_eligible(policy: WalkPolicy, state: NodeState) -> bool {
    match policy {
        WalkPolicy::Standard | WalkPolicy::Extended => {
            matches!(state, NodeState::Unvisited | NodeState::Primed)
        }
        WalkPolicy::LookAhead => state == NodeState::Unvisited,
    }
}

/// Neighbours of `current` the agent may move to, in adjacency order.
/// Empty means a dead end.
pub fn eligible_moves(g: &Graph, view: &AgentView, policy: WalkPolicy, current: NodeId) -> Vec<NodeId> {
    g.neighbors(current)
        .iter()
        .copied()
        .filter(|&w| is_eligible(policy, view.state(w)))
        .collect()
}

/// Cost of a walk along `path`: one per move for `Standard`, the degree sum
/// over the path otherwise.
pub fn policy_step_metric(policy: WalkPolicy, path: &[NodeId], g: &Graph) -> u64 {
    match policy {
        WalkPolicy::Standard => path.len().saturating_sub(1) as u64,
        WalkPolicy::Extended | WalkPolicy::LookAhead => path.iter().map(|&v| g.degree(v) as u64).sum(),
    }
}

/// Reusable walk engine bound to one graph and policy.
#[derive(Debug, Clone)]
pub struct Walker<'g> {
    graph: &'g Graph,
    policy: WalkPolicy,
    step_cap: Option<u64>,
    view: AgentView,
    eligible: Vec<NodeId>,
    path: Vec<NodeId>,
    newly_known: Vec<NodeId>,
}

/// Result of one walk without the owned buffers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct WalkSummary {
    pub steps: u64,
    pub terminated_by: Termination,
    pub learned: usize,
}

impl<'g> Walker<'g> {
    pub fn new(graph: &'g Graph, policy: WalkPolicy, step_cap: Option<u64>) -> Self {
        Walker {
            graph,
            policy,
            step_cap,
            view: AgentView::new(graph.node_count()),
            eligible: Vec::new(),
            path: Vec::new(),
            newly_known: Vec::new(),
        }
    }

    pub fn policy(&self) -> WalkPolicy {
        self.policy
    }

    pub fn view(&self) -> &AgentView {
        &self.view
    }

    /// One walk from `brain.brain()`, updating `brain` (knowledge, cumulative
    /// steps, walk count).
    pub fn walk<R: Rng + ?Sized>(&mut self, brain: &mut BrainState, rng: &mut R) -> WalkOutcome {
        let summary = self.walk_observed(brain, rng, |_, _| {});
        WalkOutcome {
            visited_path: self.path.clone(),
            newly_known: self.newly_known.clone(),
            steps: summary.steps,
            terminated_by: summary.terminated_by,
        }
    }

    /// Runs one walk and calls `progress(known_count, walk_steps)` at the
    /// start and after every move, once the move's cost has been charged.
    pub(crate) fn walk_observed<R, P>(&mut self, brain: &mut BrainState, rng: &mut R, mut progress: P) -> WalkSummary
    where
        R: Rng + ?Sized,
        P: FnMut(usize, u64),
    {
        let g = self.graph;
        let policy = self.policy;
        let origin = brain.brain();
        self.view.reset();
        self.path.clear();
        self.newly_known.clear();

        let charge = |v: NodeId| match policy {
            WalkPolicy::Standard => 0,
            _ => g.degree(v) as u64,
        };

        let mut current = origin;
        self.view.set(current, NodeState::Current);
        self.path.push(current);
        if brain.learn(current) {
            self.newly_known.push(current);
        }
        let mut steps = charge(current);
        progress(brain.known_count(), steps);

        let terminated_by = loop {
            if brain.is_complete() {
                break Termination::FullCoverage;
            }
            self.eligible.clear();
            let view = &self.view;
            self.eligible.extend(
                g.neighbors(current)
                    .iter()
                    .copied()
                    .filter(|&w| is_eligible(policy, view.state(w))),
            );
            if self.eligible.is_empty() {
                break Termination::DeadEnd;
            }
            let next = self.eligible[rng.random_range(0..self.eligible.len())];

            if policy.primes_neighbors() {
                for &w in g.neighbors(current) {
                    if self.view.state(w) == NodeState::Unvisited {
                        self.view.set(w, NodeState::Primed);
                        if brain.learn(w) {
                            self.newly_known.push(w);
                        }
                    }
                }
            }
            self.view.set(current, NodeState::Blocked);
            self.view.set(next, NodeState::Current);
            self.path.push(next);
            if brain.learn(next) {
                self.newly_known.push(next);
            }
            current = next;
            steps += match policy {
                WalkPolicy::Standard => 1,
                _ => charge(next),
            };
            progress(brain.known_count(), steps);

            if brain.is_complete() {
                break Termination::FullCoverage;
            }
            if self.step_cap.is_some_and(|cap| steps >= cap) {
                break Termination::StepCap;
            }
        };

        brain.cumulative_steps += steps;
        brain.walk_count += 1;
        WalkSummary {
            steps,
            terminated_by,
            learned: self.newly_known.len(),
        }
    }
}

/// One walk with a fresh engine. Prefer [`Walker`] when running many.
pub fn run_walk<R: Rng + ?Sized>(
    g: &Graph,
    brain: &mut BrainState,
    policy: WalkPolicy,
    step_cap: Option<u64>,
    rng: &mut R,
) -> WalkOutcome {
    Walker::new(g, policy, step_cap).walk(brain, rng)
}
