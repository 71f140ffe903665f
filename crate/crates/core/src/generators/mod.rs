//! Seeded network generators and the declarative [`GeneratorSpec`].

mod models;

pub use models::{
    er_probability, gen_ba, gen_cm, gen_er, gen_sbm, gen_waxman, gen_ws, sbm_blocks, sbm_intra_probability,
    waxman_beta, waxman_link_probability, CmReport, SbmCalibration, WaxmanLayout,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::rng::derive_seed;

pub const DEFAULT_P_REWIRE: f64 = 0.03;
pub const DEFAULT_MU: f64 = 0.01;
pub const DEFAULT_BLOCKS: usize = 10;
pub const DEFAULT_ALPHA: f64 = 0.1;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeneratorError {
    #[error("need at least 2 nodes, got {n}")]
    TooFewNodes { n: usize },
    #[error("mean degree {k_avg} must lie in (0, {n})")]
    MeanDegreeOutOfRange { k_avg: f64, n: usize },
    #[error("attachment count {m_attach} must lie in [1, {n})")]
    AttachmentOutOfRange { m_attach: usize, n: usize },
    #[error("degree sequence sums to {sum}, which is odd")]
    OddDegreeSum { sum: usize },
    #[error("requested degree {max} impossible with {n} nodes")]
    DegreeTooLarge { max: usize, n: usize },
    #[error("lattice degree {k} must be even")]
    OddLatticeDegree { k: usize },
    #[error("{name} = {value} is not a probability")]
    ProbabilityOutOfRange { name: &'static str, value: f64 },
    #[error("alpha = {alpha} must lie in (0, 1]")]
    AlphaOutOfRange { alpha: f64 },
    #[error("mean degree {k_avg} unreachable with alpha = {alpha} (needs beta = {beta:.3} > 1); try a larger alpha")]
    InfeasibleWaxman { k_avg: f64, alpha: f64, beta: f64 },
    #[error("mean degree {k_avg} needs intra-block probability {p_in:.4} > 1 at mu = {mu}; increase mu")]
    InfeasibleSbm { mu: f64, k_avg: f64, p_in: f64 },
    #[error("{blocks} blocks leave fewer than 2 nodes per block for n = {n}")]
    BlocksTooSmall { n: usize, blocks: usize },
    #[error("mean degree {k_avg} is not an even integer, required for {model}")]
    NonIntegralDegree { model: Model, k_avg: f64 },
    #[error("degree sequence has {len} entries but n = {n}")]
    SequenceLength { len: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Er,
    Ba,
    Cm,
    Ws,
    Waxman,
    Sbm,
}

impl Model {
    pub const ALL: [Model; 6] = [Model::Er, Model::Ba, Model::Cm, Model::Ws, Model::Waxman, Model::Sbm];

    pub fn name(self) -> &'static str {
        match self {
            Model::Er => "er",
            Model::Ba => "ba",
            Model::Cm => "cm",
            Model::Ws => "ws",
            Model::Waxman => "waxman",
            Model::Sbm => "sbm",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Model::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown model '{s}' (expected er, ba, cm, ws, waxman or sbm)"))
    }
}

/// Full description of one network to generate.
///
/// `k_avg` is the target mean degree for every model. For BA it maps to
/// `m_attach = k_avg / 2` and for WS to the lattice degree, so both must be
/// even integers. CM uses `degree_sequence` when given, otherwise the degree
/// sequence of a BA graph with the same `n`, `k_avg` and seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub model: Model,
    pub n: usize,
    pub k_avg: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_rewire: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_sequence: Option<Vec<usize>>,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(model: Model, n: usize, k_avg: f64, seed: u64) -> Self {
        GeneratorSpec {
            model,
            n,
            k_avg,
            p_rewire: None,
            mu: None,
            blocks: None,
            alpha: None,
            degree_sequence: None,
            seed,
        }
    }

    pub fn with_p_rewire(mut self, p: f64) -> Self {
        self.p_rewire = Some(p);
        self
    }

    pub fn with_mu(mut self, mu: f64) -> Self {
        self.mu = Some(mu);
        self
    }

    pub fn with_blocks(mut self, blocks: usize) -> Self {
        self.blocks = Some(blocks);
        self
    }

    pub fn with_alpha(mut self, alpha: f64) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_degree_sequence(mut self, seq: Vec<usize>) -> Self {
        self.n = seq.len();
        self.degree_sequence = Some(seq);
        self
    }

    fn even_degree(&self) -> Result<usize, GeneratorError> {
        let k = self.k_avg;
        if k.fract() != 0.0 || k < 2.0 || (k as usize) % 2 == 1 {
            return Err(GeneratorError::NonIntegralDegree {
                model: self.model,
                k_avg: k,
            });
        }
        Ok(k as usize)
    }

    /// Runs the model-specific constructor without LCC reduction.
    pub fn build_raw(&self) -> Result<(Graph, Vec<String>), GeneratorError> {
        let mut notes = Vec::new();
        let graph = match self.model {
            Model::Er => gen_er(self.n, self.k_avg, self.seed)?,
            Model::Ba => gen_ba(self.n, self.even_degree()? / 2, self.seed)?,
            Model::Cm => {
                let sequence = match &self.degree_sequence {
                    Some(seq) => {
                        if seq.len() != self.n {
                            return Err(GeneratorError::SequenceLength { len: seq.len(), n: self.n });
                        }
                        seq.clone()
                    }
                    None => {
                        let template_seed = derive_seed(self.seed, &[0xba]);
                        gen_ba(self.n, self.even_degree()? / 2, template_seed)?.degrees()
                    }
                };
                let (g, report) = gen_cm(&sequence, self.seed)?;
                notes.push(format!(
                    "cm erased {} self-loops and {} multi-edges (degree deficit {})",
                    report.self_loops_erased, report.multi_edges_erased, report.degree_deficit
                ));
                g
            }
            Model::Ws => gen_ws(
                self.n,
                self.even_degree()?,
                self.p_rewire.unwrap_or(DEFAULT_P_REWIRE),
                self.seed,
            )?,
            Model::Waxman => {
                let (g, layout) = gen_waxman(self.n, self.k_avg, self.alpha.unwrap_or(DEFAULT_ALPHA), self.seed)?;
                notes.push(format!("waxman beta = {:.6}", layout.beta));
                g
            }
            Model::Sbm => {
                let (g, cal) = gen_sbm(
                    self.n,
                    self.blocks.unwrap_or(DEFAULT_BLOCKS),
                    self.mu.unwrap_or(DEFAULT_MU),
                    self.k_avg,
                    self.seed,
                )?;
                if cal.clamped {
                    notes.push("sbm intra-block probability clamped to 0".to_string());
                } else {
                    notes.push(format!("sbm p_in = {:.6}", cal.p_in));
                }
                g
            }
        };
        Ok((graph, notes))
    }
}

/// Realised size of a generated network, before and after LCC reduction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealizedStats {
    pub model: Model,
    pub raw_nodes: usize,
    pub raw_edges: usize,
    pub nodes: usize,
    pub edges: usize,
    pub mean_degree: f64,
    pub notes: Vec<String>,
}

impl RealizedStats {
    pub fn lcc_fraction(&self) -> f64 {
        self.nodes as f64 / self.raw_nodes as f64
    }
}

impl fmt::Display for RealizedStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "model={} n={} m={} <k>={:.4} (raw n={} m={})",
            self.model, self.nodes, self.edges, self.mean_degree, self.raw_nodes, self.raw_edges
        )
    }
}

#[derive(Debug, Clone)]
pub struct Generated {
    /// Largest connected component, densely relabelled.
    pub graph: Graph,
    pub stats: RealizedStats,
}

/// Builds the network described by `spec` and reduces it to its largest
/// connected component.
pub fn generate(spec: &GeneratorSpec) -> Result<Generated, GeneratorError> {
    let (raw, notes) = spec.build_raw()?;
    let (graph, _) = raw.largest_connected_component();
    let stats = RealizedStats {
        model: spec.model,
        raw_nodes: raw.node_count(),
        raw_edges: raw.edge_count(),
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        mean_degree: graph.mean_degree(),
        notes,
    };
    Ok(Generated { graph, stats })
}
