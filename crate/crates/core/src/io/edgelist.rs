//! Plain-text edge lists: one `u v` pair of non-negative integer labels per
//! line, `#` comments and blank lines ignored. Direction is discarded and
//! labels are remapped to dense ids in ascending label order.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::graph::Graph;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IngestReport {
    pub raw_nodes: usize,
    pub raw_edges: usize,
    pub duplicates: usize,
    pub self_loops: usize,
    pub lcc_nodes: usize,
    pub lcc_edges: usize,
}

#[derive(Debug, Clone)]
pub struct IngestedGraph {
    /// Largest connected component of the input.
    pub graph: Graph,
    /// Original label of each dense node id, ascending.
    pub labels: Vec<u64>,
    pub report: IngestReport,
}

fn parse_label(token: &str, line: usize) -> Result<u64, IoError> {
    token.parse::<u64>().map_err(|_| IoError::Parse {
        line,
        message: format!("'{token}' is not a non-negative integer label"),
    })
}

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<IngestedGraph, IoError> {
    let mut pairs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|source| IoError::Read { line: lineno, source })?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut tokens = body.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(IoError::Parse {
                line: lineno,
                message: format!("expected two node labels, got '{body}'"),
            });
        };
        pairs.push((parse_label(a, lineno)?, parse_label(b, lineno)?));
    }
    if pairs.is_empty() {
        return Err(IoError::EmptyEdgeList);
    }

    let mut labels: Vec<u64> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    labels.sort_unstable();
    labels.dedup();
    let dense = |l: u64| labels.binary_search(&l).expect("label collected above");
    let edges: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (dense(a), dense(b))).collect();
    let (full, dropped) = Graph::build(labels.len(), edges).expect("dense ids in range");
    let (graph, kept) = full.largest_connected_component();
    let lcc_labels = kept.iter().map(|&old| labels[old]).collect();

    let report = IngestReport {
        raw_nodes: labels.len(),
        raw_edges: pairs.len(),
        duplicates: dropped.duplicates,
        self_loops: dropped.self_loops,
        lcc_nodes: graph.node_count(),
        lcc_edges: graph.edge_count(),
    };
    Ok(IngestedGraph {
        graph,
        labels: lcc_labels,
        report,
    })
}

pub fn ingest_edge_list(path: impl AsRef<Path>) -> Result<IngestedGraph, IoError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| IoError::Open {
        path: path.to_path_buf(),
        source,
    })?;
    parse_edge_list(BufReader::new(file))
}

/// Writes one `u v` line per edge (`u < v`), preceded by a size comment.
/// With `labels`, node ids are replaced by their labels.
pub fn write_edge_list<W: Write>(g: &Graph, labels: Option<&[u64]>, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# n={} m={}", g.node_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        match labels {
            Some(l) => writeln!(out, "{} {}", l[u], l[v])?,
            None => writeln!(out, "{u} {v}")?,
        }
    }
    Ok(())
}

/// Writes `id label` lines for a dense relabelling.
pub fn write_label_map<W: Write>(labels: &[u64], mut out: W) -> std::io::Result<()> {
    writeln!(out, "# node_id label")?;
    for (id, label) in labels.iter().enumerate() {
        writeln!(out, "{id} {label}")?;
    }
    Ok(())
}
