//! Betweenness centrality (Brandes) and percentile helpers.

use std::collections::VecDeque;

use crate::graph::{Graph, NodeId};
use crate::scalar::{cast, Scalar};

/// One value per node.
pub type CentralityVector<F> = Vec<F>;

/// Exact shortest-path betweenness over unordered source/target pairs,
/// endpoints excluded. On a star with four leaves the centre scores 6.
pub fn betweenness<F: Scalar>(g: &Graph) -> CentralityVector<F> {
    let n = g.node_count();
    let mut centrality = vec![F::zero(); n];

    let mut stack = Vec::with_capacity(n);
    let mut queue = VecDeque::with_capacity(n);
    let mut dist = vec![usize::MAX; n];
    let mut sigma = vec![F::zero(); n];
    let mut delta = vec![F::zero(); n];
    let mut preds: Vec<Vec<NodeId>> = vec![Vec::new(); n];

    for s in 0..n {
        for v in 0..n {
            dist[v] = usize::MAX;
            sigma[v] = F::zero();
            delta[v] = F::zero();
            preds[v].clear();
        }
        dist[s] = 0;
        sigma[s] = F::one();
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            stack.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if dist[w] == dist[v] + 1 {
                    sigma[w] = sigma[w] + sigma[v];
                    preds[w].push(v);
                }
            }
        }
        while let Some(w) = stack.pop() {
            for &v in &preds[w] {
                delta[v] = delta[v] + sigma[v] / sigma[w] * (F::one() + delta[w]);
            }
            if w != s {
                centrality[w] = centrality[w] + delta[w];
            }
        }
    }

    // Every unordered pair was counted from both ends.
    let half = F::one() / (F::one() + F::one());
    centrality.iter_mut().for_each(|c| *c = *c * half);
    centrality
}

/// Empirical percentile (`fraction` in `[0, 1]`) of `values` using the
/// lower order statistic at rank `floor(fraction * (len - 1))`.
pub fn percentile_value<F: Scalar>(values: &[F], fraction: f64) -> Option<F> {
    if values.is_empty() || !(0.0..=1.0).contains(&fraction) {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("centrality values are finite"));
    let rank = (fraction * (sorted.len() - 1) as f64).floor() as usize;
    Some(sorted[rank])
}

/// Nodes whose value is at or above the given percentile, ascending by id.
pub fn nodes_at_or_above_percentile<F: Scalar>(values: &[F], fraction: f64) -> Vec<NodeId> {
    match percentile_value(values, fraction) {
        Some(cut) => (0..values.len()).filter(|&v| values[v] >= cut).collect(),
        None => Vec::new(),
    }
}

/// Mean of a centrality vector, handy for reports.
pub fn mean<F: Scalar>(values: &[F]) -> F {
    if values.is_empty() {
        return F::zero();
    }
    values.iter().copied().sum::<F>() / cast(values.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    /// Counts, for every unordered pair, the fraction of shortest paths that
    /// pass through each interior node, by enumerating the paths outright.
    fn brute_force_betweenness(g: &Graph) -> Vec<f64> {
        let n = g.node_count();
        let mut dist = vec![vec![usize::MAX; n]; n];
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            let mut frontier = vec![s];
            let mut d = 0;
            while !frontier.is_empty() {
                d += 1;
                let mut next = Vec::new();
                for &u in &frontier {
                    for &v in g.neighbors(u) {
                        if row[v] == usize::MAX {
                            row[v] = d;
                            next.push(v);
                        }
                    }
                }
                frontier = next;
            }
        }
        fn paths(g: &Graph, dist: &[Vec<usize>], at: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if at == t {
                out.push(cur.clone());
                return;
            }
            for &w in g.neighbors(at) {
                if dist[w][t] != usize::MAX && dist[w][t] + 1 == dist[at][t] {
                    cur.push(w);
                    paths(g, dist, w, t, cur, out);
                    cur.pop();
                }
            }
        }
        let mut bc = vec![0.0; n];
        for s in 0..n {
            for t in s + 1..n {
                if dist[s][t] == usize::MAX {
                    continue;
                }
                let mut all = Vec::new();
                paths(g, &dist, s, t, &mut vec![s], &mut all);
                let total = all.len() as f64;
                for p in &all {
                    for &v in &p[1..p.len() - 1] {
                        bc[v] += 1.0 / total;
                    }
                }
            }
        }
        bc
    }

    #[test]
    fn path_middle() {
        assert_eq!(betweenness::<f64>(&path(3)), vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn star_centre() {
        let bc = betweenness::<f64>(&star(5));
        assert_eq!(bc[0], 6.0);
        assert!(bc[1..].iter().all(|&b| b == 0.0));
    }

    #[test]
    fn five_cycle_matches_enumeration() {
        let g = cycle(5);
        let oracle = brute_force_betweenness(&g);
        assert!(oracle.iter().all(|&b| (b - 1.0).abs() < 1e-12));
        for (a, b) in betweenness::<f64>(&g).iter().zip(&oracle) {
            assert_relative_eq!(*a, *b, epsilon = 1e-12);
        }
    }

    #[test]
    fn single_precision_agrees() {
        let g = cycle(7);
        let lo = betweenness::<f32>(&g);
        let hi = betweenness::<f64>(&g);
        for (a, b) in lo.iter().zip(&hi) {
            assert_relative_eq!(*a as f64, *b, epsilon = 1e-5);
        }
    }

    #[test]
    fn percentile_cut() {
        let values = [5.0, 1.0, 3.0, 2.0, 4.0];
        assert_eq!(percentile_value(&values, 0.0), Some(1.0));
        assert_eq!(percentile_value(&values, 0.5), Some(3.0));
        assert_eq!(percentile_value(&values, 1.0), Some(5.0));
        assert_eq!(nodes_at_or_above_percentile(&values, 0.5), vec![0, 2, 4]);
        assert_eq!(nodes_at_or_above_percentile(&values, 0.0).len(), 5);
        assert_eq!(percentile_value(&values, 1.5), None);
    }

    proptest! {
        #[test]
        fn brandes_matches_brute_force(
            n in 2usize..=8,
            edges in prop::collection::vec((0usize..8, 0usize..8), 0..20),
        ) {
            let edges = edges.into_iter().filter(|&(u, v)| u < n && v < n);
            let (g, _) = Graph::build(n, edges).unwrap();
            let fast = betweenness::<f64>(&g);
            let slow = brute_force_betweenness(&g);
            for (a, b) in fast.iter().zip(&slow) {
                prop_assert!((a - b).abs() < 1e-9, "{fast:?} vs {slow:?}");
                prop_assert!(*a >= 0.0);
            }
        }
    }
}
