//! Centralised knowledge acquisition on complex networks.
//!
//! Agents repeatedly perform self-avoiding walks from one fixed "brain"
//! node and report what they find back to it. This crate provides the
//! graph type, six random network generators, the three walk dynamics
//! (standard, extended and look-ahead), an experiment harness that sweeps
//! start nodes, repetitions and model parameters, and the file formats used
//! by the `netbrain` command-line tool.
//!
//! Real-valued results (centrality, clustering, curve statistics) are
//! generic over [`Scalar`]; the aliases below fix the common precisions.

pub mod centrality;
pub mod cli;
pub mod dynamics;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod rng;
pub mod scalar;

pub use centrality::{betweenness, CentralityVector};
pub use dynamics::{
    run_discovery, run_walk, BrainState, DiscoveryRun, LearningCurve, NodeState, Termination, WalkOutcome, WalkPolicy,
    Walker,
};
pub use generators::{generate, GeneratorSpec, Model};
pub use graph::{build_graph, Graph, NodeId};
pub use harness::{
    aggregate, run_experiment, select_starts, sweep, AggregateCurve, ExperimentConfig, GraphSource, GroupBy,
    StartSelection, SweepAxis, TaggedCurve,
};
pub use scalar::Scalar;

pub type Centrality = CentralityVector<f64>;
pub type Centrality32 = CentralityVector<f32>;
pub type Aggregate = AggregateCurve<f64>;
pub type Aggregate32 = AggregateCurve<f32>;
pub type Sweep = Vec<harness::SweepPoint<f64>>;
