//! Synthetic point-graph measurement harness.
//!
//! For each threshold distance, a batch of seeded uniform point graphs is
//! solved by the exact DP and both frontier heuristics; the report carries
//! mean cost, mean inner-loop evaluations and mean cluster shape per
//! algorithm. Runs are independent, each on its own seeded stream, and
//! execute in parallel.

use rayon::prelude::*;

use crate::clustering::clustering_cost;
use crate::dp::exact_dp_weighted;
use crate::graph::{generate_point_graph, PointGraphParams};
use crate::heuristics::{heuristic_dp, HeuristicVariant};

#[derive(Clone, Debug)]
pub struct BenchParams {
    pub n: usize,
    pub l_values: Vec<f64>,
    pub runs: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchAlgo {
    Exact,
    FrontierPlusOne,
    FrontierOrPositiveEdge,
}

impl BenchAlgo {
    pub fn label(&self) -> &'static str {
        match self {
            BenchAlgo::Exact => "exact",
            BenchAlgo::FrontierPlusOne => "h1",
            BenchAlgo::FrontierOrPositiveEdge => "h2",
        }
    }
}

/// Aggregated measurements of one algorithm at one threshold distance.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub algo: BenchAlgo,
    pub n: usize,
    pub l: f64,
    pub mean_cost: f64,
    pub mean_opcount: f64,
    pub mean_clusters: f64,
    pub mean_cluster_size: f64,
    pub runs: usize,
    pub seed: u64,
}

/// One solve, for the per-run instrumentation dump.
#[derive(Clone, Debug)]
pub struct RunRecord {
    pub algo: BenchAlgo,
    pub n: usize,
    pub l: f64,
    pub run: usize,
    pub cost: f64,
    pub opcount: u64,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub per_run: Vec<RunRecord>,
}

struct RunOutcome {
    run: usize,
    // per algorithm: cost, opcount, cluster count
    measures: [(f64, u64, usize); 3],
}

pub fn bench_tables(p: &BenchParams) -> BenchReport {
    assert!(p.runs >= 1, "need at least one run");
    let mut report = BenchReport::default();
    for &l in &p.l_values {
        let outcomes: Vec<RunOutcome> = (0..p.runs)
            .into_par_iter()
            .map(|run| {
                let g = generate_point_graph(&PointGraphParams { n: p.n, l, seed: p.seed + run as u64 });
                let order: Vec<u32> = (0..p.n as u32).collect();
                let exact = exact_dp_weighted(&g, &order);
                let h1 = heuristic_dp(&g, &order, HeuristicVariant::FrontierPlusOne);
                let h2 = heuristic_dp(&g, &order, HeuristicVariant::FrontierOrPositiveEdge);
                let h1_cost = clustering_cost(&g, &h1.clustering).expect("solver output is a partition");
                let h2_cost = clustering_cost(&g, &h2.clustering).expect("solver output is a partition");
                RunOutcome {
                    run,
                    measures: [
                        (exact.cost, exact.stats.opcount, exact.clustering.len()),
                        (h1_cost, h1.stats.opcount, h1.clustering.len()),
                        (h2_cost, h2.stats.opcount, h2.clustering.len()),
                    ],
                }
            })
            .collect();
        let algos = [BenchAlgo::Exact, BenchAlgo::FrontierPlusOne, BenchAlgo::FrontierOrPositiveEdge];
        for (a, algo) in algos.into_iter().enumerate() {
            let runs = p.runs as f64;
            let mean_cost = outcomes.iter().map(|o| o.measures[a].0).sum::<f64>() / runs;
            let mean_opcount = outcomes.iter().map(|o| o.measures[a].1 as f64).sum::<f64>() / runs;
            let mean_clusters = outcomes.iter().map(|o| o.measures[a].2 as f64).sum::<f64>() / runs;
            report.rows.push(BenchRow {
                algo,
                n: p.n,
                l,
                mean_cost,
                mean_opcount,
                mean_clusters,
                mean_cluster_size: if mean_clusters > 0.0 { p.n as f64 / mean_clusters } else { 0.0 },
                runs: p.runs,
                seed: p.seed,
            });
            for o in &outcomes {
                report.per_run.push(RunRecord {
                    algo,
                    n: p.n,
                    l,
                    run: o.run,
                    cost: o.measures[a].0,
                    opcount: o.measures[a].1,
                });
            }
        }
    }
    report
}
