//! Weighted cluster editing on one-dimensional point graphs and
//! read-alignment graphs.
//!
//! The library builds weighted graphs from aligned paired-end reads or from
//! points on a line, solves minimum cluster editing exactly over
//! consecutive clusters of a vertex order (which is globally optimal for 1D
//! point graphs in coordinate order), approximates it with two
//! frontier-bounded linear-space solvers, constructs good vertex orders
//! greedily, and combines order construction with the frontier DP into one
//! streaming pass. Around the solvers sit a clique-enumeration baseline, an
//! exhaustive ground-truth solver for small graphs, a prediction pipeline
//! (cluster summaries, false-discovery-rate selection, overlap removal, a
//! read simulator) and a benchmark harness.

// `!(x > 0.0)` in validations is deliberate: NaN must fail the check too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bench;
pub mod cliques;
pub mod clustering;
pub mod dp;
pub mod error;
pub mod graph;
pub mod heuristics;
pub mod instances;
pub mod io;
pub mod normal;
pub mod oracle;
pub mod ordering;
pub mod pipeline;
pub mod read;
pub mod weight;

pub use bench::{bench_tables, BenchAlgo, BenchParams, BenchReport};
pub use cliques::{enumerate_maximal_cliques, CliqueSet, DEFAULT_ACTIVE_CAP};
pub use clustering::{clustering_cost, Clustering};
pub use dp::{exact_dp_unweighted, exact_dp_weighted, extract_clusters, ExactSolution, SolveStats};
pub use error::{Error, Result};
pub use graph::{
    build_alignment_graph, f_l_weight, generate_point_graph, DistanceWeight, Graph, PointGraph,
    PointGraphParams, WeightedGraph,
};
pub use heuristics::{heuristic_cost_report, heuristic_dp, HeuristicSolution, HeuristicVariant};
pub use normal::std_normal_sf;
pub use oracle::brute_force_cluster_edit;
pub use ordering::{adaptive_cluster_edit, lookahead_order, nearest_neighbor_order};
pub use pipeline::{
    attach_pvalues, bh_select, remove_overlaps, simulate_reads, summarize_cluster, Prediction,
    PredictionDraft, PvalueSource, SimEvent, SimulatedReads, SvKind,
};
pub use read::{pair_weight, AlignParams, Read, SignConvention};
pub use weight::{sat_add, Weight, W_MAX};
