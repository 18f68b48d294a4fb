//! `cledit`: cluster editing on read-alignment and 1D point graphs.
//!
//! Every file is TSV (UTF-8, LF). Exit code 0 on success, 2 when the input
//! fails validation.

// `!(x > 0.0)` in validations is deliberate: NaN must fail the check too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use cledit::bench::{bench_tables, BenchParams};
use cledit::clustering::{clustering_cost, Clustering};
use cledit::dp::exact_dp_weighted;
use cledit::error::Error;
use cledit::graph::{build_alignment_graph, validate_reads, Graph, WeightedGraph};
use cledit::heuristics::{heuristic_dp, HeuristicVariant};
use cledit::io as tsv;
use cledit::ordering::{adaptive_cluster_edit, lookahead_order};
use cledit::pipeline::{
    attach_pvalues, bh_select, remove_overlaps, simulate_reads, summarize_cluster, Prediction,
    PvalueSource, SvKind,
};
use cledit::read::{AlignParams, Read, SignConvention};

#[derive(Parser)]
#[command(name = "cledit", version, about = "Weighted cluster editing for read-alignment and 1D point graphs")]
struct Cli {
    #[command(flatten)]
    model: ModelArgs,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ModelArgs {
    /// Tail-probability threshold T of the edge criterion
    #[arg(long, global = true, default_value_t = 0.4)]
    threshold: f64,
    /// Mean insert size
    #[arg(long, global = true, default_value_t = 112.0)]
    mu: f64,
    /// Insert-size standard deviation
    #[arg(long, global = true, default_value_t = 15.0)]
    sigma: f64,
    /// Weight polarity: corrected (edge iff both tails >= T) or paper
    /// (printed formulas, edge iff both tails <= T)
    #[arg(long, global = true, value_enum, default_value_t = WeightSign::Corrected)]
    weight_sign: WeightSign,
    /// Saturation cap standing in for infinite weights
    #[arg(long, global = true, default_value_t = 1e15)]
    wmax: f64,
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightSign {
    Corrected,
    Paper,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Exact,
    H1,
    H2,
    Adaptive,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the alignment graph from a reads file and dump its edges
    BuildGraph {
        #[arg(long)]
        reads: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cluster reads (or a pre-built graph dump) and write the clustering
    Cluster {
        #[arg(long, conflicts_with = "graph")]
        reads: Option<PathBuf>,
        /// Edge dump with dense vertex indices instead of a reads file
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum)]
        algo: AlgoArg,
        /// Explicit vertex order (one id per line); exact/h1/h2 only
        #[arg(long)]
        order: Option<PathBuf>,
        /// Start vertex for the adaptive solver (read id, or index with --graph);
        /// defaults to the leftmost read
        #[arg(long)]
        start: Option<u64>,
        /// Also report the clustering cost on stderr
        #[arg(long)]
        cost: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate maximal cliques of the alignment graph
    Cliques {
        #[arg(long)]
        reads: PathBuf,
        #[arg(long, default_value_t = cledit::cliques::DEFAULT_ACTIVE_CAP)]
        max_active: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a vertex order by greedy chaining
    Order {
        #[arg(long)]
        reads: PathBuf,
        /// Start read id; defaults to the leftmost read
        #[arg(long)]
        start: Option<u64>,
        /// Score candidates against this many previously placed vertices
        #[arg(long, default_value_t = 1)]
        lookahead: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve seeded synthetic point graphs and report per-algorithm means
    Bench {
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        /// Threshold distance; repeat for several tables
        #[arg(long = "l", required = true)]
        l_values: Vec<f64>,
        #[arg(long, default_value_t = 100)]
        runs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also write per-run instrumentation rows (variant n l cost opcount)
        #[arg(long)]
        per_run: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Simulate reads over planted insertions/deletions
    Simulate {
        #[arg(long)]
        genome_length: f64,
        /// Events file: position<TAB>kind<TAB>length
        #[arg(long)]
        events: Option<PathBuf>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the events with their spanning-read counts
        #[arg(long)]
        truth: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Summarize clusters into predictions and select by false discovery rate
    Predict {
        #[arg(long)]
        reads: PathBuf,
        /// Clustering file produced by `cluster`
        #[arg(long)]
        clusters: PathBuf,
        /// `placeholder` or a file with one p-value per cluster line
        #[arg(long, default_value = "placeholder")]
        pvalues: String,
        #[arg(long, default_value_t = 0.1)]
        fdr: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Drop overlapping predictions, strongest (lowest p-value) first
    PostprocessOverlaps {
        #[arg(long)]
        predictions: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn align_params(m: &ModelArgs) -> Result<AlignParams, Error> {
    let sign = match m.weight_sign {
        WeightSign::Corrected => SignConvention::Corrected,
        WeightSign::Paper => SignConvention::Paper,
    };
    let p = AlignParams::new(m.mu, m.sigma, m.threshold)?.with_sign(sign).with_wmax(m.wmax);
    p.validate()?;
    Ok(p)
}

fn open(path: &Path) -> Result<BufReader<File>, Error> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::InvalidInput(format!("cannot open {}: {e}", path.display())))
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Error> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            Error::InvalidInput(format!("cannot create {}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(std::io::stdout())),
    })
}

/// Reads file -> sorted read list plus the vertex -> external-id table.
fn load_reads(path: &Path) -> Result<(Vec<Read>, Vec<u64>), Error> {
    let mut reads = tsv::read_reads(open(path)?)?;
    reads.sort_by(|a, b| (a.left, a.id).partial_cmp(&(b.left, b.id)).expect("finite coordinates"));
    validate_reads(&reads)?;
    let ids = reads.iter().map(|r| r.id).collect();
    Ok((reads, ids))
}

enum LoadedGraph {
    FromReads { ids: Vec<u64>, graph: WeightedGraph },
    FromDump { graph: WeightedGraph },
}

impl LoadedGraph {
    fn graph(&self) -> &WeightedGraph {
        match self {
            LoadedGraph::FromReads { graph, .. } | LoadedGraph::FromDump { graph } => graph,
        }
    }

    fn ids(&self) -> Vec<u64> {
        match self {
            LoadedGraph::FromReads { ids, .. } => ids.clone(),
            LoadedGraph::FromDump { graph } => (0..graph.vertex_count() as u64).collect(),
        }
    }

    /// Maps an external id (read id, or index for dumps) to its vertex.
    fn vertex_of(&self, id: u64) -> Result<usize, Error> {
        let v = match self {
            LoadedGraph::FromReads { ids, .. } => ids.iter().position(|&i| i == id),
            LoadedGraph::FromDump { graph } => {
                ((id as usize) < graph.vertex_count()).then_some(id as usize)
            }
        };
        v.ok_or_else(|| Error::InvalidInput(format!("unknown vertex id {id}")))
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    let params = align_params(&cli.model)?;
    match cli.cmd {
        Cmd::BuildGraph { reads, output } => {
            let (reads, ids) = load_reads(&reads)?;
            let g = build_alignment_graph(&reads, &params)?;
            let mut out = sink(&output)?;
            tsv::write_graph(&mut out, &g, &ids)?;
        }
        Cmd::Cluster { reads, graph, algo, order, start, cost, output } => {
            let loaded = match (&reads, &graph) {
                (Some(r), None) => {
                    let (reads, ids) = load_reads(r)?;
                    let graph = build_alignment_graph(&reads, &params)?;
                    LoadedGraph::FromReads { ids, graph }
                }
                (None, Some(gp)) => {
                    let (n, edges) = tsv::read_graph_edges(open(gp)?)?;
                    LoadedGraph::FromDump {
                        graph: WeightedGraph::from_edges_capped(n, &edges, params.wmax)?,
                    }
                }
                _ => return Err(Error::InvalidInput("pass exactly one of --reads / --graph".into())),
            };
            let g = loaded.graph();
            let n = g.vertex_count();
            let vertex_order: Vec<u32> = match &order {
                Some(path) => {
                    let external = tsv::read_order(open(path)?)?;
                    let mapped: Result<Vec<u32>, Error> =
                        external.iter().map(|&id| loaded.vertex_of(id).map(|v| v as u32)).collect();
                    let mapped = mapped?;
                    check_permutation(&mapped, n)?;
                    mapped
                }
                None => (0..n as u32).collect(),
            };
            let clustering = match algo {
                AlgoArg::Exact => exact_dp_weighted(g, &vertex_order).clustering,
                AlgoArg::H1 => heuristic_dp(g, &vertex_order, HeuristicVariant::FrontierPlusOne).clustering,
                AlgoArg::H2 => {
                    heuristic_dp(g, &vertex_order, HeuristicVariant::FrontierOrPositiveEdge).clustering
                }
                AlgoArg::Adaptive => {
                    if order.is_some() {
                        return Err(Error::InvalidInput(
                            "the adaptive solver builds its own order; --order only applies to exact/h1/h2".into(),
                        ));
                    }
                    if n == 0 {
                        Clustering::default()
                    } else {
                        let start_vertex = match start {
                            Some(id) => loaded.vertex_of(id)?,
                            None => 0, // reads are sorted, vertex 0 is leftmost
                        };
                        adaptive_cluster_edit(g, start_vertex).clustering
                    }
                }
            };
            if cost {
                eprintln!("cost\t{}", clustering_cost(g, &clustering)?);
            }
            let mut out = sink(&output)?;
            tsv::write_clustering(&mut out, &clustering, &loaded.ids())?;
        }
        Cmd::Cliques { reads, max_active, output } => {
            let (reads, ids) = load_reads(&reads)?;
            let g = build_alignment_graph(&reads, &params)?;
            let cliques = cledit::cliques::enumerate_maximal_cliques(&reads, &g, max_active)?;
            let mut out = sink(&output)?;
            tsv::write_cliques(&mut out, &cliques.cliques, &ids)?;
        }
        Cmd::Order { reads, start, lookahead, output } => {
            if lookahead == 0 {
                return Err(Error::InvalidInput("--lookahead must be at least 1".into()));
            }
            let (reads, ids) = load_reads(&reads)?;
            let g = build_alignment_graph(&reads, &params)?;
            let mut out = sink(&output)?;
            if !reads.is_empty() {
                let start_vertex = match start {
                    Some(id) => ids
                        .iter()
                        .position(|&i| i == id)
                        .ok_or_else(|| Error::InvalidInput(format!("unknown read id {id}")))?,
                    None => 0,
                };
                let order = lookahead_order(&g, lookahead, start_vertex);
                tsv::write_order(&mut out, &order, &ids)?;
            }
        }
        Cmd::Bench { n, l_values, runs, seed, per_run, output } => {
            if runs == 0 {
                return Err(Error::InvalidInput("--runs must be at least 1".into()));
            }
            if l_values.iter().any(|&l| !(l > 0.0)) {
                return Err(Error::InvalidInput("every --l must be positive".into()));
            }
            let report = bench_tables(&BenchParams { n, l_values, runs, seed });
            let mut out = sink(&output)?;
            tsv::write_bench_report(&mut out, &report)?;
            if let Some(path) = per_run {
                let mut out = sink(&Some(path))?;
                tsv::write_run_records(&mut out, &report.per_run)?;
            }
        }
        Cmd::Simulate { genome_length, events, n, seed, truth, output } => {
            let events = match events {
                Some(path) => tsv::read_events(open(&path)?)?,
                None => Vec::new(),
            };
            let sim = simulate_reads(genome_length, &events, n, &params, seed)?;
            let mut out = sink(&output)?;
            tsv::write_reads(&mut out, &sim.reads)?;
            if let Some(path) = truth {
                let mut out = sink(&Some(path))?;
                tsv::write_events_with_support(&mut out, &events, &sim.spanning)?;
            }
        }
        Cmd::Predict { reads, clusters, pvalues, fdr, output } => {
            if !(fdr > 0.0 && fdr <= 1.0) {
                return Err(Error::InvalidInput(format!("--fdr must be in (0, 1], got {fdr}")));
            }
            let (reads, ids) = load_reads(&reads)?;
            let clusters_ext = tsv::read_clustering(open(&clusters)?)?;
            let mut vertex_clusters = Vec::with_capacity(clusters_ext.len());
            for cluster in &clusters_ext {
                let members: Result<Vec<u32>, Error> = cluster
                    .iter()
                    .map(|&id| {
                        ids.iter()
                            .position(|&i| i == id)
                            .map(|v| v as u32)
                            .ok_or_else(|| Error::InvalidInput(format!("cluster references unknown read id {id}")))
                    })
                    .collect();
                let members = members?;
                if members.is_empty() {
                    return Err(Error::InvalidInput("empty cluster line".into()));
                }
                vertex_clusters.push(members);
            }
            let drafts: Vec<_> =
                vertex_clusters.iter().map(|c| summarize_cluster(c, &reads, &params)).collect();
            let external_ps;
            let (source, comment) = if pvalues == "placeholder" {
                (
                    PvalueSource::PlaceholderZTest { sigma: params.sigma },
                    Some("p-value source: placeholder z-test (uncalibrated; supply --pvalues FILE for calibrated values)"),
                )
            } else {
                external_ps = tsv::read_pvalues(open(Path::new(&pvalues))?)?;
                (PvalueSource::External(&external_ps), None)
            };
            let predictions = attach_pvalues(&drafts, source)?;
            let selected = select_by_kind(predictions, fdr);
            let mut out = sink(&output)?;
            tsv::write_predictions(&mut out, &selected, comment)?;
        }
        Cmd::PostprocessOverlaps { predictions, output } => {
            let preds = tsv::read_predictions(open(&predictions)?)?;
            for p in &preds {
                if !(0.0..=1.0).contains(&p.p_value) {
                    return Err(Error::InvalidPvalue(p.p_value));
                }
                if !(p.end > p.start) {
                    return Err(Error::InvalidInput(format!(
                        "prediction [{}, {}) is empty",
                        p.start, p.end
                    )));
                }
            }
            let kept = remove_overlaps(preds);
            let mut out = sink(&output)?;
            tsv::write_predictions(&mut out, &kept, None)?;
        }
    }
    Ok(())
}

fn check_permutation(order: &[u32], n: usize) -> Result<(), Error> {
    if order.len() != n {
        return Err(Error::InvalidInput(format!(
            "order lists {} vertices, graph has {n}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if (v as usize) >= n || seen[v as usize] {
            return Err(Error::InvalidInput("order is not a permutation of the vertices".into()));
        }
        seen[v as usize] = true;
    }
    Ok(())
}

/// Insertions and deletions are selected separately, each against its own
/// candidate count; output is sorted by start.
fn select_by_kind(predictions: Vec<Prediction>, fdr: f64) -> Vec<Prediction> {
    let mut selected = Vec::new();
    for kind in [SvKind::Insertion, SvKind::Deletion] {
        let of_kind: Vec<&Prediction> = predictions.iter().filter(|p| p.kind == kind).collect();
        let pvals: Vec<f64> = of_kind.iter().map(|p| p.p_value).collect();
        for i in bh_select(&pvals, fdr, pvals.len()) {
            selected.push(of_kind[i].clone());
        }
    }
    selected.sort_by(|a, b| a.start.total_cmp(&b.start).then(a.end.total_cmp(&b.end)));
    selected
}
