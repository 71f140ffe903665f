//! Test-only oracles, independent of the walk engine.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use netbrain::dynamics::{BrainState, WalkPolicy, Walker};
use netbrain::graph::Graph;
use netbrain::rng::seeded;
use statrs::distribution::{ChiSquared, ContinuousCDF};

/// Exact distribution of the first walk's step count from `brain`, by
/// enumerating every trajectory with its probability.
pub fn exact_first_walk_steps(g: &Graph, brain: usize, policy: WalkPolicy, cap: Option<u64>) -> BTreeMap<u64, f64> {
    let mut out = BTreeMap::new();
    enumerate_first_walks(g, brain, policy, cap, &mut |steps, _, prob| {
        *out.entry(steps).or_insert(0.0) += prob;
    });
    out
}

/// Nodes the brain knows at the end of at least one possible first walk.
pub fn possibly_learned(g: &Graph, brain: usize, policy: WalkPolicy, cap: Option<u64>) -> Vec<bool> {
    let mut seen = vec![false; g.node_count()];
    enumerate_first_walks(g, brain, policy, cap, &mut |_, known, _| {
        for &v in known {
            seen[v] = true;
        }
    });
    seen
}

/// Calls `record(steps, known, probability)` once per complete trajectory.
pub fn enumerate_first_walks(
    g: &Graph,
    brain: usize,
    policy: WalkPolicy,
    cap: Option<u64>,
    record: &mut dyn FnMut(u64, &BTreeSet<usize>, f64),
) {
    let known: BTreeSet<usize> = [brain].into_iter().collect();
    let steps = match policy {
        WalkPolicy::Standard => 0,
        _ => g.degree(brain) as u64,
    };
    if known.len() == g.node_count() {
        record(steps, &known, 1.0);
        return;
    }
    explore(g, policy, cap, vec![brain], BTreeSet::new(), known, steps, 1.0, record);
}

#[allow(clippy::too_many_arguments)]
fn explore(
    g: &Graph,
    policy: WalkPolicy,
    cap: Option<u64>,
    path: Vec<usize>,
    primed: BTreeSet<usize>,
    known: BTreeSet<usize>,
    steps: u64,
    prob: f64,
    record: &mut dyn FnMut(u64, &BTreeSet<usize>, f64),
) {
    let n = g.node_count();
    let here = *path.last().unwrap();
    let options: Vec<usize> = g
        .neighbors(here)
        .iter()
        .copied()
        .filter(|w| !path.contains(w))
        .filter(|w| policy != WalkPolicy::LookAhead || !primed.contains(w))
        .collect();
    if options.is_empty() {
        record(steps, &known, prob);
        return;
    }
    let share = prob / options.len() as f64;
    for &next in &options {
        let mut primed = primed.clone();
        let mut known = known.clone();
        if policy != WalkPolicy::Standard {
            for &w in g.neighbors(here) {
                if !path.contains(&w) {
                    primed.insert(w);
                    known.insert(w);
                }
            }
        }
        let mut path = path.clone();
        path.push(next);
        known.insert(next);
        let steps = steps
            + match policy {
                WalkPolicy::Standard => 1,
                _ => g.degree(next) as u64,
            };
        let capped = cap.is_some_and(|c| steps >= c);
        if known.len() == n || capped {
            record(steps, &known, share);
        } else {
            explore(g, policy, cap, path, primed, known, steps, share, record);
        }
    }
}

/// Step counts of `walks` independent first walks from `brain`.
pub fn sample_first_walk_steps(
    g: &Graph,
    brain: usize,
    policy: WalkPolicy,
    cap: Option<u64>,
    walks: usize,
    seed: u64,
) -> BTreeMap<u64, u64> {
    let mut rng = seeded(seed);
    let mut walker = Walker::new(g, policy, cap);
    let mut counts = BTreeMap::new();
    for _ in 0..walks {
        let mut state = BrainState::new(brain, g.node_count());
        let out = walker.walk(&mut state, &mut rng);
        *counts.entry(out.steps).or_insert(0) += 1;
    }
    counts
}

/// Pearson statistic and degrees of freedom of `observed` against
/// `expected` probabilities. Adjacent outcomes are pooled until every bin
/// expects at least 5. Returns `None` if an outcome outside the support was
/// observed; a single-bin distribution yields (0, 0).
pub fn chi_square(observed: &BTreeMap<u64, u64>, expected: &BTreeMap<u64, f64>) -> Option<(f64, usize)> {
    if observed.keys().any(|k| !expected.contains_key(k)) {
        return None;
    }
    let total: u64 = observed.values().sum();
    let total = total as f64;
    let mut bins: Vec<(f64, f64)> = Vec::new();
    let (mut e_acc, mut o_acc) = (0.0, 0.0);
    for (k, &p) in expected {
        e_acc += p * total;
        o_acc += *observed.get(k).unwrap_or(&0) as f64;
        if e_acc >= 5.0 {
            bins.push((o_acc, e_acc));
            e_acc = 0.0;
            o_acc = 0.0;
        }
    }
    if e_acc > 0.0 || o_acc > 0.0 {
        match bins.last_mut() {
            Some(last) => {
                last.0 += o_acc;
                last.1 += e_acc;
            }
            None => bins.push((o_acc, e_acc)),
        }
    }
    if bins.len() < 2 {
        return Some((0.0, 0));
    }
    let stat = bins.iter().map(|(o, e)| (o - e).powi(2) / e).sum();
    Some((stat, bins.len() - 1))
}

/// Upper tail of the chi-square distribution; 1 when `df` is 0.
pub fn chi_square_tail(stat: f64, df: usize) -> f64 {
    if df == 0 {
        return 1.0;
    }
    1.0 - ChiSquared::new(df as f64).unwrap().cdf(stat)
}

pub fn chi_square_p(observed: &BTreeMap<u64, u64>, expected: &BTreeMap<u64, f64>) -> Option<f64> {
    chi_square(observed, expected).map(|(stat, df)| chi_square_tail(stat, df))
}

fn is_connected(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        for (v, &a) in adj.iter().enumerate() {
            if frontier & (1 << v) != 0 {
                next |= a;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == (1u32 << n) - 1
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// One representative of every isomorphism class of connected graphs on
/// `n` nodes.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let mut adj = vec![0u32; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << i) != 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        if !is_connected(n, &adj) {
            continue;
        }
        let canonical = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(_, &(u, v))| adj[p[u]] & (1 << p[v]) != 0)
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .min()
            .unwrap();
        classes.insert(canonical);
    }
    classes
        .into_iter()
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask & (1 << i) != 0).map(|(_, &e)| e);
            Graph::build(n, edges).unwrap().0
        })
        .collect()
}

/// The n-th harmonic number.
pub fn harmonic(n: usize) -> f64 {
    (1..=n).map(|i| 1.0 / i as f64).sum()
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

pub fn sample_sd(xs: &[f64]) -> f64 {
    let m = mean(xs);
    (xs.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (xs.len() - 1) as f64).sqrt()
}

pub fn path_graph(n: usize) -> Graph {
    Graph::build(n, (1..n).map(|v| (v - 1, v))).unwrap().0
}

pub fn cycle_graph(n: usize) -> Graph {
    Graph::build(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap().0
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap().0
}

/// Star on `n` nodes with centre 0.
pub fn star_graph(n: usize) -> Graph {
    Graph::build(n, (1..n).map(|v| (0, v))).unwrap().0
}
