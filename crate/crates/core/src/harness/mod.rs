//! Declarative experiments: pick brain nodes, run discovery for every
//! (policy, start, repetition) cell, aggregate the learning curves, and sweep
//! a parameter axis.

mod aggregate;
mod experiment;
mod selection;

pub use aggregate::{aggregate, AggregateCurve, GroupBy};
pub use experiment::{
    prepare_graph, run_experiment, run_on_graph, sweep, ExperimentConfig, ExperimentResult, GraphProvenance,
    GraphSource, PreparedGraph, SweepAxis, SweepPoint, TaggedCurve,
};
pub use selection::{select_starts, StartSelection, PERCENTILE_SAMPLE_CAP};

use thiserror::Error;

use crate::dynamics::{DynamicsError, WalkPolicy};
use crate::generators::GeneratorError;
use crate::graph::NodeId;
use crate::io::IoError;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("start selection {0} is empty")]
    EmptySelection(String),
    #[error("node label {0} is not in the graph's largest component")]
    UnknownLabel(u64),
    #[error("cell policy={policy} start={start} repetition={repetition} failed: {source}")]
    Cell {
        policy: WalkPolicy,
        start: NodeId,
        repetition: usize,
        #[source]
        source: DynamicsError,
    },
    #[error("cannot aggregate curves with different threshold grids")]
    MixedGrids,
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Io(#[from] IoError),
}

/// Runs `f` on a pool bounded by `NETBRAIN_THREADS` when set, otherwise on
/// rayon's global pool.
pub fn with_thread_limit<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let limit = std::env::var("NETBRAIN_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&k| k > 0);
    match limit.and_then(|k| rayon::ThreadPoolBuilder::new().num_threads(k).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}
