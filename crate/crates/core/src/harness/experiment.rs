use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{aggregate, select_starts, with_thread_limit, AggregateCurve, GroupBy, HarnessError, StartSelection};
use crate::dynamics::{default_thresholds, run_discovery, LearningCurve, WalkPolicy};
use crate::generators::{generate, GeneratorSpec, Model, RealizedStats};
use crate::graph::{Graph, NodeId};
use crate::io::{ingest_edge_list, IngestReport};
use crate::rng::{derive_seed, seeded};
use crate::scalar::Scalar;

/// Stream index reserved for start selection, away from cell indices.
const SELECTION_STREAM: u64 = u64::MAX;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GraphSource {
    Generator(GeneratorSpec),
    EdgeList { path: PathBuf },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub graph: GraphSource,
    pub policies: Vec<WalkPolicy>,
    pub start: StartSelection,
    pub repetitions_per_start: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step_cap: Option<u64>,
    #[serde(default = "default_thresholds")]
    pub thresholds: Vec<f64>,
    pub master_seed: u64,
}

impl ExperimentConfig {
    pub fn new(graph: GraphSource, policies: Vec<WalkPolicy>, start: StartSelection, master_seed: u64) -> Self {
        ExperimentConfig {
            graph,
            policies,
            start,
            repetitions_per_start: 10,
            step_cap: None,
            thresholds: default_thresholds(),
            master_seed,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.policies.is_empty() {
            return Err(HarnessError::Config("no walk policies".into()));
        }
        if self.repetitions_per_start == 0 {
            return Err(HarnessError::Config("repetitions_per_start must be at least 1".into()));
        }
        let ok = !self.thresholds.is_empty()
            && self.thresholds.iter().all(|&t| t > 0.0 && t <= 1.0)
            && self.thresholds.windows(2).all(|w| w[0] < w[1]);
        if !ok {
            return Err(HarnessError::Config(
                "thresholds must be strictly increasing within (0, 1]".into(),
            ));
        }
        Ok(())
    }

    /// Default group label for curves from this config.
    pub fn group_label(&self) -> String {
        match &self.graph {
            GraphSource::Generator(spec) => spec.model.to_string(),
            GraphSource::EdgeList { .. } => "edge_list".to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphProvenance {
    Generated(RealizedStats),
    Ingested(IngestReport),
    Supplied { nodes: usize, edges: usize },
}

/// A connected graph ready for experiments, with the external label of
/// every dense node id.
#[derive(Debug, Clone)]
pub struct PreparedGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
    pub provenance: GraphProvenance,
}

impl PreparedGraph {
    /// Wraps an in-memory graph, reduced to its largest component.
    pub fn from_graph(graph: Graph) -> Self {
        let (graph, _) = graph.largest_connected_component();
        let labels = (0..graph.node_count() as u64).collect();
        let provenance = GraphProvenance::Supplied {
            nodes: graph.node_count(),
            edges: graph.edge_count(),
        };
        PreparedGraph {
            graph,
            labels,
            provenance,
        }
    }

    fn node_for_label(&self, label: u64) -> Result<NodeId, HarnessError> {
        // Generated and supplied graphs use identity labels; ingested ones are sorted.
        self.labels.binary_search(&label).map_err(|_| HarnessError::UnknownLabel(label))
    }
}

pub fn prepare_graph(source: &GraphSource) -> Result<PreparedGraph, HarnessError> {
    match source {
        GraphSource::Generator(spec) => {
            let generated = generate(spec)?;
            let labels = (0..generated.graph.node_count() as u64).collect();
            Ok(PreparedGraph {
                graph: generated.graph,
                labels,
                provenance: GraphProvenance::Generated(generated.stats),
            })
        }
        GraphSource::EdgeList { path } => {
            let ingested = ingest_edge_list(path)?;
            Ok(PreparedGraph {
                graph: ingested.graph,
                labels: ingested.labels,
                provenance: GraphProvenance::Ingested(ingested.report),
            })
        }
    }
}

/// One learning curve with the cell that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaggedCurve {
    pub group: String,
    pub policy: WalkPolicy,
    pub start_node: NodeId,
    pub start_label: u64,
    pub start_degree: usize,
    pub repetition: usize,
    pub seed: u64,
    pub curve: LearningCurve,
    pub walks: u64,
    pub cap_hits: u64,
}

#[derive(Debug, Clone)]
pub struct ExperimentResult {
    pub provenance: GraphProvenance,
    pub nodes: usize,
    pub edges: usize,
    pub starts: Vec<NodeId>,
    /// Sorted by (group, policy, start node, repetition).
    pub curves: Vec<TaggedCurve>,
}

impl ExperimentResult {
    pub fn cap_hits(&self) -> u64 {
        self.curves.iter().map(|c| c.cap_hits).sum()
    }

    pub fn walks(&self) -> u64 {
        self.curves.iter().map(|c| c.walks).sum()
    }
}

fn policy_code(p: WalkPolicy) -> u64 {
    match p {
        WalkPolicy::Standard => 0,
        WalkPolicy::Extended => 1,
        WalkPolicy::LookAhead => 2,
    }
}

/// Seed of the cell (policy, start node, repetition). Depends only on the
/// cell's own coordinates, so adding or removing cells leaves others alone.
pub(crate) fn cell_seed(master: u64, policy: WalkPolicy, start: NodeId, repetition: usize) -> u64 {
    derive_seed(master, &[policy_code(policy), start as u64, repetition as u64])
}

/// Runs every (policy, start, repetition) cell of `cfg` on `prepared`.
pub fn run_on_graph(prepared: &PreparedGraph, cfg: &ExperimentConfig, group: &str) -> Result<ExperimentResult, HarnessError> {
    cfg.validate()?;
    let g = &prepared.graph;
    let selection = match &cfg.start {
        StartSelection::Explicit { nodes } => StartSelection::Explicit {
            nodes: nodes
                .iter()
                .map(|&l| prepared.node_for_label(l).map(|v| v as u64))
                .collect::<Result<_, _>>()?,
        },
        other => other.clone(),
    };
    let mut selection_rng = seeded(derive_seed(cfg.master_seed, &[SELECTION_STREAM]));
    let starts = select_starts(g, &selection, &mut selection_rng)?;

    let mut cells = Vec::with_capacity(cfg.policies.len() * starts.len() * cfg.repetitions_per_start);
    for &policy in &cfg.policies {
        for &start in &starts {
            for repetition in 0..cfg.repetitions_per_start {
                cells.push((policy, start, repetition));
            }
        }
    }

    let curves: Result<Vec<TaggedCurve>, HarnessError> = with_thread_limit(|| {
        cells
            .par_iter()
            .map(|&(policy, start, repetition)| {
                let seed = cell_seed(cfg.master_seed, policy, start, repetition);
                let run = run_discovery(g, start, policy, cfg.step_cap, &cfg.thresholds, &mut seeded(seed))
                    .map_err(|source| HarnessError::Cell {
                        policy,
                        start,
                        repetition,
                        source,
                    })?;
                Ok(TaggedCurve {
                    group: group.to_string(),
                    policy,
                    start_node: start,
                    start_label: prepared.labels[start],
                    start_degree: g.degree(start),
                    repetition,
                    seed,
                    curve: run.curve,
                    walks: run.brain.walk_count,
                    cap_hits: run.cap_hits,
                })
            })
            .collect()
    });
    let mut curves = curves?;
    curves.sort_by(|a, b| {
        (&a.group, a.policy, a.start_node, a.repetition).cmp(&(&b.group, b.policy, b.start_node, b.repetition))
    });

    Ok(ExperimentResult {
        provenance: prepared.provenance.clone(),
        nodes: g.node_count(),
        edges: g.edge_count(),
        starts,
        curves,
    })
}

/// Builds the configured graph and runs every cell on it.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentResult, HarnessError> {
    cfg.validate()?;
    let prepared = prepare_graph(&cfg.graph)?;
    run_on_graph(&prepared, cfg, &cfg.group_label())
}

/// The parameter varied by a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "axis", content = "values", rename_all = "snake_case", deny_unknown_fields)]
pub enum SweepAxis {
    KAvg(Vec<f64>),
    PRewire(Vec<f64>),
    Model(Vec<Model>),
    /// One run of the base config, curves bucketed by start-node degree.
    HubDegree,
}

#[derive(Debug, Clone)]
pub struct SweepPoint<F> {
    pub label: String,
    pub result: ExperimentResult,
    pub aggregates: Vec<AggregateCurve<F>>,
}

fn base_generator(base: &ExperimentConfig) -> Result<&GeneratorSpec, HarnessError> {
    match &base.graph {
        GraphSource::Generator(spec) => Ok(spec),
        GraphSource::EdgeList { .. } => Err(HarnessError::Config(
            "this sweep axis needs a generator graph source".into(),
        )),
    }
}

/// Runs `base` once per axis value, each with its own derived graph and
/// master seeds, and aggregates per value.
pub fn sweep<F: Scalar>(base: &ExperimentConfig, axis: &SweepAxis) -> Result<Vec<SweepPoint<F>>, HarnessError> {
    base.validate()?;
    let variant = |i: usize, label: String, spec: GeneratorSpec| -> Result<SweepPoint<F>, HarnessError> {
        let spec = GeneratorSpec {
            seed: derive_seed(spec.seed, &[i as u64]),
            ..spec
        };
        let cfg = ExperimentConfig {
            graph: GraphSource::Generator(spec),
            master_seed: derive_seed(base.master_seed, &[i as u64]),
            ..base.clone()
        };
        let prepared = prepare_graph(&cfg.graph)?;
        let result = run_on_graph(&prepared, &cfg, &label)?;
        let aggregates = aggregate(&result.curves, GroupBy::Policy)?;
        Ok(SweepPoint {
            label,
            result,
            aggregates,
        })
    };

    match axis {
        SweepAxis::KAvg(values) => {
            let spec = base_generator(base)?;
            values
                .iter()
                .enumerate()
                .map(|(i, &k)| variant(i, format!("k_avg={k}"), GeneratorSpec { k_avg: k, ..spec.clone() }))
                .collect()
        }
        SweepAxis::PRewire(values) => {
            let spec = base_generator(base)?;
            if spec.model != Model::Ws {
                return Err(HarnessError::Config("p_rewire sweeps need a ws generator".into()));
            }
            values
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    variant(i, format!("p_rewire={p}"), GeneratorSpec { p_rewire: Some(p), ..spec.clone() })
                })
                .collect()
        }
        SweepAxis::Model(models) => {
            let spec = base_generator(base)?;
            models
                .iter()
                .enumerate()
                .map(|(i, &m)| variant(i, format!("model={m}"), GeneratorSpec { model: m, ..spec.clone() }))
                .collect()
        }
        SweepAxis::HubDegree => {
            let prepared = prepare_graph(&base.graph)?;
            let label = base.group_label();
            let result = run_on_graph(&prepared, base, &label)?;
            let aggregates = aggregate(&result.curves, GroupBy::StartDegree)?;
            Ok(vec![SweepPoint {
                label,
                result,
                aggregates,
            }])
        }
    }
}
