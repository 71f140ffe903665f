//! Immutable undirected simple graphs.
//!
//! Every other module works on [`Graph`]: generators build one, the walk
//! engine reads it, the harness ranks its nodes. Adjacency lists are kept
//! sorted so that "pick the i-th eligible neighbour" is reproducible for a
//! given random stream.

use std::collections::VecDeque;

use thiserror::Error;

use crate::scalar::Scalar;

/// Dense node index in `[0, n)`.
pub type NodeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge #{index} ({u}, {v}) has an endpoint outside [0, {n})")]
    EndpointOutOfRange {
        index: usize,
        u: NodeId,
        v: NodeId,
        n: usize,
    },
}

/// What `build_graph` silently discarded.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildReport {
    pub self_loops: usize,
    pub duplicates: usize,
}

impl BuildReport {
    pub fn dropped(&self) -> usize {
        self.self_loops + self.duplicates
    }
}

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a simple graph on `n` nodes. Self-loops and repeated pairs
    /// (in either orientation) are dropped and counted.
    pub fn build<I>(n: usize, edges: I) -> Result<(Self, BuildReport), GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut report = BuildReport::default();
        for (index, (u, v)) in edges.into_iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { index, u, v, n });
            }
            if u == v {
                report.self_loops += 1;
                continue;
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut half_edges = 0;
        let mut duplicate_half_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            duplicate_half_edges += before - list.len();
            half_edges += list.len();
        }
        report.duplicates = duplicate_half_edges / 2;
        Ok((
            Graph {
                adjacency,
                edge_count: half_edges / 2,
            },
            report,
        ))
    }

    /// Builds from adjacency lists that already describe a simple symmetric
    /// graph. Only used by code that maintains those invariants itself.
    pub(crate) fn from_sorted_adjacency(adjacency: Vec<Vec<NodeId>>) -> Self {
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(adjacency.iter().all(|l| l.windows(2).all(|w| w[0] < w[1])));
        Graph {
            adjacency,
            edge_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn mean_degree(&self) -> f64 {
        if self.node_count() == 0 {
            return 0.0;
        }
        2.0 * self.edge_count as f64 / self.node_count() as f64
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// BFS component label per node, labels assigned in order of the
    /// smallest node of each component.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.node_count();
        let mut label = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        let mut count = 0;
        for root in 0..n {
            if label[root] != usize::MAX {
                continue;
            }
            label[root] = count;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.node_count() > 0 && self.component_labels().1 == 1
    }

    /// Induced subgraph on the largest connected component, relabelled
    /// densely in increasing order of original id.
    ///
    /// Returns the subgraph and the `new -> old` id map. Ties between equal
    /// sized components go to the one containing the smallest node id.
    pub fn largest_connected_component(&self) -> (Graph, Vec<NodeId>) {
        let n = self.node_count();
        if n == 0 {
            return (self.clone(), Vec::new());
        }
        let (label, count) = self.component_labels();
        let mut sizes = vec![0usize; count];
        for &l in &label {
            sizes[l] += 1;
        }
        // Labels are numbered by smallest member, so the first maximum wins ties.
        let mut best = 0;
        for (l, &s) in sizes.iter().enumerate() {
            if s > sizes[best] {
                best = l;
            }
        }
        let old_ids: Vec<NodeId> = (0..n).filter(|&v| label[v] == best).collect();
        if old_ids.len() == n {
            return (self.clone(), old_ids);
        }
        let mut new_id = vec![usize::MAX; n];
        for (i, &old) in old_ids.iter().enumerate() {
            new_id[old] = i;
        }
        let adjacency = old_ids
            .iter()
            .map(|&old| self.adjacency[old].iter().map(|&w| new_id[w]).collect())
            .collect();
        (Graph::from_sorted_adjacency(adjacency), old_ids)
    }

    /// Nodes by descending degree, ties by ascending id.
    pub fn degree_ranked_nodes(&self) -> Vec<NodeId> {
        let mut order: Vec<NodeId> = (0..self.node_count()).collect();
        order.sort_by(|&a, &b| self.degree(b).cmp(&self.degree(a)).then(a.cmp(&b)));
        order
    }

    /// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
    pub fn average_clustering<F: Scalar>(&self) -> F {
        let n = self.node_count();
        if n == 0 {
            return F::zero();
        }
        let mut total = F::zero();
        for u in 0..n {
            let nbrs = &self.adjacency[u];
            let k = nbrs.len();
            if k < 2 {
                continue;
            }
            let mut links = 0usize;
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    if self.has_edge(a, b) {
                        links += 1;
                    }
                }
            }
            let pairs = k * (k - 1) / 2;
            total = total + F::from_usize(links).unwrap() / F::from_usize(pairs).unwrap();
        }
        total / F::from_usize(n).unwrap()
    }
}

/// Convenience wrapper for callers that don't care about the drop report.
pub fn build_graph<I>(n: usize, edges: I) -> Result<(Graph, BuildReport), GraphError>
where
    I: IntoIterator<Item = (NodeId, NodeId)>,
{
    Graph::build(n, edges)
}
