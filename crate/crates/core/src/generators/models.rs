//! The six random network models. Each constructor is pure given its
//! parameters and seed, and returns the raw (possibly disconnected) graph.

use rand::seq::SliceRandom;
use rand::Rng;

use super::GeneratorError;
use crate::graph::{Graph, NodeId};
use crate::rng::{seeded, SimRng};

fn check_probability(name: &'static str, value: f64) -> Result<(), GeneratorError> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(GeneratorError::ProbabilityOutOfRange { name, value })
    }
}

fn check_mean_degree(n: usize, k_avg: f64) -> Result<(), GeneratorError> {
    if n < 2 {
        return Err(GeneratorError::TooFewNodes { n });
    }
    if !(k_avg > 0.0 && k_avg < n as f64) {
        return Err(GeneratorError::MeanDegreeOutOfRange { k_avg, n });
    }
    Ok(())
}

/// Links every unordered pair `(u, v)` with probability `prob(u, v)`,
/// consuming one uniform draw per pair in lexicographic pair order.
fn bernoulli_pairs<F>(n: usize, rng: &mut SimRng, mut prob: F) -> Graph
where
    F: FnMut(NodeId, NodeId) -> f64,
{
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            let draw: f64 = rng.random();
            if draw < prob(u, v) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    // u ascends in the outer loop so every list is already sorted.
    Graph::from_sorted_adjacency(adjacency)
}

/// Link probability that gives expected mean degree `k_avg` in G(n, p).
pub fn er_probability(n: usize, k_avg: f64) -> f64 {
    (k_avg / (n as f64 - 1.0)).min(1.0)
}

/// Erdős–Rényi G(n, p) with `p = k_avg / (n - 1)`.
pub fn gen_er(n: usize, k_avg: f64, seed: u64) -> Result<Graph, GeneratorError> {
    check_mean_degree(n, k_avg)?;
    let p = er_probability(n, k_avg);
    let mut rng = seeded(seed);
    Ok(bernoulli_pairs(n, &mut rng, |_, _| p))
}

/// Barabási–Albert growth from a clique on `m_attach + 1` nodes; every
/// later node attaches to `m_attach` distinct existing nodes chosen with
/// probability proportional to degree.
pub fn gen_ba(n: usize, m_attach: usize, seed: u64) -> Result<Graph, GeneratorError> {
    if m_attach < 1 || m_attach >= n {
        return Err(GeneratorError::AttachmentOutOfRange { m_attach, n });
    }
    let mut rng = seeded(seed);
    let core = m_attach + 1;
    let mut edges = Vec::with_capacity(core * m_attach / 2 + (n - core) * m_attach);
    // Each endpoint appears once per incident edge.
    let mut endpoints: Vec<NodeId> = Vec::with_capacity(2 * edges.capacity());
    for u in 0..core {
        for v in u + 1..core {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    let mut targets = Vec::with_capacity(m_attach);
    for v in core..n {
        targets.clear();
        while targets.len() < m_attach {
            let t = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((t, v));
            endpoints.push(t);
            endpoints.push(v);
        }
    }
    Ok(Graph::build(n, edges).expect("endpoints in range").0)
}

/// How far an erased configuration-model realisation strays from its input.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CmReport {
    pub self_loops_erased: usize,
    pub multi_edges_erased: usize,
    /// `sum(requested) - sum(realised)` degrees.
    pub degree_deficit: usize,
}

/// Erased configuration model: shuffle the stub list, pair neighbours,
/// then delete self-loops and repeated edges.
pub fn gen_cm(degree_sequence: &[usize], seed: u64) -> Result<(Graph, CmReport), GeneratorError> {
    let n = degree_sequence.len();
    let sum: usize = degree_sequence.iter().sum();
    if sum % 2 == 1 {
        return Err(GeneratorError::OddDegreeSum { sum });
    }
    if let Some(&max) = degree_sequence.iter().max() {
        if max >= n {
            return Err(GeneratorError::DegreeTooLarge { max, n });
        }
    }
    let mut stubs: Vec<NodeId> = degree_sequence
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v, d))
        .collect();
    let mut rng = seeded(seed);
    stubs.shuffle(&mut rng);
    let pairs = stubs.chunks_exact(2).map(|c| (c[0], c[1]));
    let (graph, dropped) = Graph::build(n, pairs).expect("stubs in range");
    let report = CmReport {
        self_loops_erased: dropped.self_loops,
        multi_edges_erased: dropped.duplicates,
        degree_deficit: sum - 2 * graph.edge_count(),
    };
    Ok((graph, report))
}

/// Watts–Strogatz: ring lattice with `k_even / 2` neighbours per side, each
/// lattice edge `(u, u + j)` rewired with probability `p_rewire` to keep `u`
/// and pick a uniform new endpoint that is neither `u` nor a neighbour.
pub fn gen_ws(n: usize, k_even: usize, p_rewire: f64, seed: u64) -> Result<Graph, GeneratorError> {
    if k_even % 2 == 1 {
        return Err(GeneratorError::OddLatticeDegree { k: k_even });
    }
    if k_even < 2 || k_even >= n {
        return Err(GeneratorError::MeanDegreeOutOfRange {
            k_avg: k_even as f64,
            n,
        });
    }
    check_probability("p_rewire", p_rewire)?;
    let half = k_even / 2;
    let mut adjacency: Vec<Vec<NodeId>> = (0..n)
        .map(|u| {
            let mut list: Vec<NodeId> = (1..=half).flat_map(|j| [(u + j) % n, (u + n - j) % n]).collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();

    fn insert(list: &mut Vec<NodeId>, v: NodeId) {
        if let Err(pos) = list.binary_search(&v) {
            list.insert(pos, v);
        }
    }
    fn remove(list: &mut Vec<NodeId>, v: NodeId) {
        if let Ok(pos) = list.binary_search(&v) {
            list.remove(pos);
        }
    }

    let mut rng = seeded(seed);
    for j in 1..=half {
        for u in 0..n {
            let v = (u + j) % n;
            let draw: f64 = rng.random();
            if draw >= p_rewire || adjacency[u].len() >= n - 1 {
                continue;
            }
            let w = loop {
                let w = rng.random_range(0..n);
                if w != u && adjacency[u].binary_search(&w).is_err() {
                    break w;
                }
            };
            remove(&mut adjacency[u], v);
            remove(&mut adjacency[v], u);
            insert(&mut adjacency[u], w);
            insert(&mut adjacency[w], u);
        }
    }
    Ok(Graph::from_sorted_adjacency(adjacency))
}

/// Node positions in the unit square.
#[derive(Debug, Clone, PartialEq)]
pub struct WaxmanLayout {
    pub points: Vec<(f64, f64)>,
    /// Calibrated prefactor on the exponential decay.
    pub beta: f64,
}

/// Waxman link probability for two points `distance` apart.
pub fn waxman_link_probability(beta: f64, distance: f64, alpha: f64) -> f64 {
    beta * (-distance / (alpha * std::f64::consts::SQRT_2)).exp()
}

fn distance(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

/// The `beta` that makes the expected mean degree over this point set equal
/// to `k_avg`. Expected degree is linear in `beta`, so this is exact.
pub fn waxman_beta(points: &[(f64, f64)], k_avg: f64, alpha: f64) -> f64 {
    let n = points.len();
    let mut total = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            total += waxman_link_probability(1.0, distance(points[u], points[v]), alpha);
        }
    }
    k_avg * n as f64 / (2.0 * total)
}

/// Waxman geometric graph on uniform points in the unit square, with decay
/// length `alpha * sqrt(2)` and `beta` fitted to the target mean degree.
pub fn gen_waxman(n: usize, k_avg: f64, alpha: f64, seed: u64) -> Result<(Graph, WaxmanLayout), GeneratorError> {
    check_mean_degree(n, k_avg)?;
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(GeneratorError::AlphaOutOfRange { alpha });
    }
    let mut rng = seeded(seed);
    let points: Vec<(f64, f64)> = (0..n).map(|_| (rng.random(), rng.random())).collect();
    let beta = waxman_beta(&points, k_avg, alpha);
    if beta > 1.0 {
        return Err(GeneratorError::InfeasibleWaxman { k_avg, alpha, beta });
    }
    let graph = bernoulli_pairs(n, &mut rng, |u, v| {
        waxman_link_probability(beta, distance(points[u], points[v]), alpha)
    });
    Ok((graph, WaxmanLayout { points, beta }))
}

/// Intra-block probability solved from
/// `k_avg = p_in * (n_b - 1) + mu * (n - n_b)` with `n_b = n / blocks`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SbmCalibration {
    pub p_in: f64,
    /// The raw solution was negative and has been raised to zero.
    pub clamped: bool,
}

pub fn sbm_intra_probability(n: usize, blocks: usize, mu: f64, k_avg: f64) -> Result<SbmCalibration, GeneratorError> {
    if blocks == 0 || n / blocks < 2 {
        return Err(GeneratorError::BlocksTooSmall { n, blocks });
    }
    check_probability("mu", mu)?;
    let block_size = n as f64 / blocks as f64;
    let raw = (k_avg - mu * (n as f64 - block_size)) / (block_size - 1.0);
    if raw > 1.0 {
        return Err(GeneratorError::InfeasibleSbm { mu, k_avg, p_in: raw });
    }
    if raw < 0.0 {
        log::warn!(
            "SBM inter-block probability {mu} alone exceeds mean degree {k_avg}; intra-block probability clamped to 0 (solution was {raw:.5})"
        );
        return Ok(SbmCalibration {
            p_in: 0.0,
            clamped: true,
        });
    }
    Ok(SbmCalibration {
        p_in: raw,
        clamped: false,
    })
}

/// Block index of every node: `n / blocks` per block with the remainder
/// spread one each over the first blocks.
pub fn sbm_blocks(n: usize, blocks: usize) -> Vec<usize> {
    let base = n / blocks;
    let extra = n % blocks;
    (0..blocks)
        .flat_map(|b| std::iter::repeat_n(b, base + usize::from(b < extra)))
        .collect()
}

/// Stochastic block model with equal-sized blocks, inter-block probability
/// `mu` and intra-block probability fitted to `k_avg`.
pub fn gen_sbm(n: usize, blocks: usize, mu: f64, k_avg: f64, seed: u64) -> Result<(Graph, SbmCalibration), GeneratorError> {
    check_mean_degree(n, k_avg)?;
    let calibration = sbm_intra_probability(n, blocks, mu, k_avg)?;
    let block_of = sbm_blocks(n, blocks);
    let mut rng = seeded(seed);
    let p_in = calibration.p_in;
    let graph = bernoulli_pairs(n, &mut rng, |u, v| if block_of[u] == block_of[v] { p_in } else { mu });
    Ok((graph, calibration))
}
