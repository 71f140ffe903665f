//! The `netbrain` command line: `generate`, `ingest`, `run` and `sweep`.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::dynamics::{default_thresholds, WalkPolicy};
use crate::generators::{generate, GeneratorSpec, Model};
use crate::harness::{aggregate, run_experiment, sweep, ExperimentConfig, GraphSource, GroupBy, StartSelection};
use crate::io::{
    ingest_edge_list, write_aggregate_csv, write_curves_csv, write_edge_list, write_label_map, ConfigFile, Manifest,
};

#[derive(Debug, Parser)]
#[command(name = "netbrain", version, about = "Self-avoiding walk discovery from a fixed brain node")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a network (reduced to its largest component) as an edge list.
    Generate(GenerateArgs),
    /// Read an edge list and report its size, duplicates and largest component.
    Ingest(IngestArgs),
    /// Run discovery experiments and write per-curve and aggregate CSVs.
    Run(RunArgs),
    /// Run a config's [sweep] axis and write one aggregate CSV per value.
    Sweep(SweepArgs),
}

#[derive(Debug, Args, Clone)]
pub struct ModelArgs {
    /// Mean degree target.
    #[arg(long = "k")]
    pub k: Option<f64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// WS rewiring probability.
    #[arg(long = "p")]
    pub p: Option<f64>,
    /// SBM inter-block probability.
    #[arg(long)]
    pub mu: Option<f64>,
    /// SBM block count.
    #[arg(long)]
    pub blocks: Option<usize>,
    /// Waxman decay length as a fraction of the square's diagonal.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// CM degree sequence: whitespace-separated integers.
    #[arg(long)]
    pub degree_file: Option<PathBuf>,
}

impl ModelArgs {
    fn spec(&self, model: Model, seed: u64) -> Result<GeneratorSpec> {
        let mut spec = match (&self.degree_file, model) {
            (Some(path), Model::Cm) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let seq = text
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().with_context(|| format!("bad degree '{t}'")))
                    .collect::<Result<Vec<_>>>()?;
                let k = seq.iter().sum::<usize>() as f64 / seq.len().max(1) as f64;
                GeneratorSpec::new(model, seq.len(), k, seed).with_degree_sequence(seq)
            }
            (Some(_), _) => bail!("--degree-file only applies to the cm model"),
            (None, _) => {
                let n = self.n.context("--n is required")?;
                let k = self.k.context("--k is required")?;
                GeneratorSpec::new(model, n, k, seed)
            }
        };
        let stray = [
            ("--p", self.p.is_some(), Model::Ws),
            ("--mu", self.mu.is_some(), Model::Sbm),
            ("--blocks", self.blocks.is_some(), Model::Sbm),
            ("--alpha", self.alpha.is_some(), Model::Waxman),
        ];
        for (flag, given, owner) in stray {
            if given && model != owner {
                bail!("{flag} only applies to the {owner} model");
            }
        }
        spec.p_rewire = self.p;
        spec.mu = self.mu;
        spec.blocks = self.blocks;
        spec.alpha = self.alpha;
        Ok(spec)
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// er, ba, cm, ws, waxman or sbm
    pub model: Model,
    #[command(flatten)]
    pub params: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output edge list; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    pub path: PathBuf,
    /// Write the largest component as a dense edge list.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the dense-id to original-label map.
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, conflicts_with_all = ["edge_list", "model"])]
    pub config: Option<PathBuf>,
    #[arg(long, conflicts_with = "model")]
    pub edge_list: Option<PathBuf>,
    #[arg(long)]
    pub model: Option<Model>,
    #[command(flatten)]
    pub params: ModelArgs,
    #[arg(long, default_value_t = 0)]
    pub graph_seed: u64,
    /// Walk policy; repeat for several.
    #[arg(long = "policy")]
    pub policies: Vec<WalkPolicy>,
    #[arg(long, group = "starts_sel", conflicts_with = "config")]
    pub stride: Option<usize>,
    #[arg(long, group = "starts_sel", conflicts_with = "config")]
    pub top_hubs: Option<usize>,
    #[arg(long, group = "starts_sel", conflicts_with = "config")]
    pub percentile: Option<f64>,
    /// Comma-separated start node labels.
    #[arg(long, group = "starts_sel", value_delimiter = ',', conflicts_with = "config")]
    pub starts: Option<Vec<u64>>,
    #[arg(long)]
    pub reps: Option<usize>,
    #[arg(long)]
    pub step_cap: Option<u64>,
    /// Master seed.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub config: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

pub fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Ingest(args) => cmd_ingest(args),
        Command::Run(args) => cmd_run(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn cmd_generate(args: GenerateArgs) -> Result<()> {
    let spec = args.params.spec(args.model, args.seed)?;
    let generated = generate(&spec)?;
    let stats = format!(
        "n={} m={} k_avg={:.4}",
        generated.stats.nodes, generated.stats.edges, generated.stats.mean_degree
    );
    match &args.out {
        Some(path) => {
            let mut w = create(path)?;
            write_edge_list(&generated.graph, None, &mut w)?;
            w.flush()?;
            println!("{stats}");
        }
        None => {
            let stdout = std::io::stdout();
            write_edge_list(&generated.graph, None, stdout.lock())?;
            eprintln!("{stats}");
        }
    }
    for note in &generated.stats.notes {
        log::info!("{note}");
    }
    if generated.stats.nodes < generated.stats.raw_nodes {
        eprintln!(
            "kept largest component: {} of {} nodes",
            generated.stats.nodes, generated.stats.raw_nodes
        );
    }
    Ok(())
}

fn cmd_ingest(args: IngestArgs) -> Result<()> {
    let ingested = ingest_edge_list(&args.path)?;
    let r = &ingested.report;
    println!("raw_nodes={} raw_edges={}", r.raw_nodes, r.raw_edges);
    println!("dropped_duplicates={} dropped_self_loops={}", r.duplicates, r.self_loops);
    println!(
        "lcc_nodes={} lcc_edges={} k_avg={:.4}",
        r.lcc_nodes,
        r.lcc_edges,
        ingested.graph.mean_degree()
    );
    if let Some(path) = &args.out {
        let mut w = create(path)?;
        write_edge_list(&ingested.graph, None, &mut w)?;
        w.flush()?;
    }
    if let Some(path) = &args.labels {
        let mut w = create(path)?;
        write_label_map(&ingested.labels, &mut w)?;
        w.flush()?;
    }
    Ok(())
}

fn run_config(args: &RunArgs) -> Result<ExperimentConfig> {
    let mut cfg = match &args.config {
        Some(path) => ConfigFile::load(path)?.experiment(),
        None => {
            let graph = match (&args.edge_list, args.model) {
                (Some(path), _) => GraphSource::EdgeList { path: path.clone() },
                (None, Some(model)) => GraphSource::Generator(args.params.spec(model, args.graph_seed)?),
                (None, None) => bail!("give --config, --edge-list or --model"),
            };
            let start = match (args.stride, args.top_hubs, args.percentile, &args.starts) {
                (Some(stride), ..) => StartSelection::DegreeRankedStride { stride },
                (_, Some(count), ..) => StartSelection::TopHubs { count },
                (_, _, Some(p), _) => StartSelection::BetweennessPercentile { min_percentile: p },
                (_, _, _, Some(nodes)) => StartSelection::Explicit { nodes: nodes.clone() },
                _ => StartSelection::DegreeRankedStride { stride: 50 },
            };
            ExperimentConfig {
                graph,
                policies: vec![WalkPolicy::Standard],
                start,
                repetitions_per_start: 10,
                step_cap: None,
                thresholds: default_thresholds(),
                master_seed: 0,
            }
        }
    };
    if !args.policies.is_empty() {
        cfg.policies = args.policies.clone();
    }
    if let Some(reps) = args.reps {
        cfg.repetitions_per_start = reps;
    }
    if args.step_cap.is_some() {
        cfg.step_cap = args.step_cap;
    }
    if let Some(seed) = args.seed {
        cfg.master_seed = seed;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

fn write_manifest(dir: &Path, mut manifest: Manifest, started_at: u64, clock: Instant) -> Result<()> {
    manifest.started_at = started_at;
    manifest.wall_time_secs = clock.elapsed().as_secs_f64();
    fs::write(dir.join("manifest.json"), manifest.to_json()? + "\n")?;
    fs::write(dir.join("config.toml"), manifest.config.to_toml()?)?;
    Ok(())
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let started_at = unix_now();
    let clock = Instant::now();
    let cfg = run_config(&args)?;
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;

    let result = run_experiment(&cfg)?;
    let aggregates = aggregate::<f64>(&result.curves, GroupBy::Policy)?;

    let mut w = create(&args.out.join("curves.csv"))?;
    write_curves_csv(&result.curves, &mut w)?;
    w.flush()?;
    let mut w = create(&args.out.join("aggregate.csv"))?;
    write_aggregate_csv(&aggregates, &mut w)?;
    w.flush()?;

    let manifest = Manifest::new("run", ConfigFile::from_experiment(&cfg, None), &[&result]);
    println!(
        "{} curves over {} nodes, {} walks, {} cap hits -> {}",
        result.curves.len(),
        result.nodes,
        manifest.walks,
        manifest.cap_hits,
        args.out.display()
    );
    write_manifest(&args.out, manifest, started_at, clock)
}

/// File-name-safe form of a sweep label.
fn slug(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '.' || c == '-' { c } else { '_' })
        .collect()
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let started_at = unix_now();
    let clock = Instant::now();
    let file = ConfigFile::load(&args.config)?;
    let Some(axis) = file.sweep.clone() else {
        bail!("{} has no [sweep] table", args.config.display());
    };
    let cfg = file.experiment();
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;

    let points = sweep::<f64>(&cfg, &axis)?;
    let mut all_aggregates = Vec::new();
    let mut all_curves = Vec::new();
    for (i, point) in points.iter().enumerate() {
        let name = format!("aggregate_{i:02}_{}.csv", slug(&point.label));
        let mut w = create(&args.out.join(name))?;
        write_aggregate_csv(&point.aggregates, &mut w)?;
        w.flush()?;
        all_aggregates.extend(point.aggregates.iter().cloned());
        all_curves.extend(point.result.curves.iter().cloned());
    }
    let mut w = create(&args.out.join("aggregate.csv"))?;
    write_aggregate_csv(&all_aggregates, &mut w)?;
    w.flush()?;
    let mut w = create(&args.out.join("curves.csv"))?;
    write_curves_csv(&all_curves, &mut w)?;
    w.flush()?;

    let results: Vec<_> = points.iter().map(|p| &p.result).collect();
    let manifest = Manifest::new("sweep", file.clone(), &results);
    println!("{} sweep points -> {}", points.len(), args.out.display());
    write_manifest(&args.out, manifest, started_at, clock)
}
