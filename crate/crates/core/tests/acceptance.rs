#![allow(clippy::excessive_precision)] // quadrature node tables carry their published digits

//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the measured numbers (visible with `--nocapture`).

use cledit::bench::{bench_tables, BenchAlgo, BenchParams};
use cledit::clustering::{clustering_cost, Clustering};
use cledit::dp::exact_dp_weighted;
use cledit::graph::{
    build_alignment_graph, generate_point_graph_with_rule, DistanceWeight, PointGraphParams,
    WeightedGraph,
};
use cledit::heuristics::{heuristic_dp, HeuristicVariant};
use cledit::instances::{example_two_cluster_graph, interleaved_two_population};
use cledit::oracle::brute_force_cluster_edit;
use cledit::ordering::{adaptive_cluster_edit, nearest_neighbor_order};
use cledit::pipeline::{bh_select, remove_overlaps, simulate_reads, summarize_cluster, Prediction, SvKind};
use cledit::read::{AlignParams, Read};
use cledit::std_normal_sf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random 1D weighted point graph whose weights are dyadic (a decreasing
/// staircase of the rational rule), so every cost sum is exact in f64 and
/// extended-real equality is meaningful.
fn dyadic_point_graph(n: usize, seed: u64) -> cledit::graph::PointGraph {
    let l = 0.05 + 0.05 * (seed % 9) as f64;
    generate_point_graph_with_rule(
        &PointGraphParams { n, l, seed },
        DistanceWeight::QuantizedRational { l, grid: 1.0 / 16.0 },
    )
}

#[test]
fn criterion_01_exact_dp_equals_brute_force() {
    let t0 = std::time::Instant::now();
    let mut checked = 0usize;
    for seed in 0..1000u64 {
        let n = 2 + (seed % 8) as usize; // 2..=9
        let g = dyadic_point_graph(n, seed);
        let order: Vec<u32> = (0..n as u32).collect();
        let sol = exact_dp_weighted(&g, &order);
        let (_, brute) = brute_force_cluster_edit(&g).unwrap();
        assert_eq!(sol.cost, brute, "seed {seed}: DP {} vs brute force {brute}", sol.cost);
        checked += 1;
    }
    let elapsed = t0.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}, limit is one minute");
    println!("criterion 1 PASS: {checked} instances, exact cost equality, {elapsed:?}");
}

#[test]
fn criterion_02_example_graph_costs_two() {
    let g = example_two_cluster_graph();
    let (_, brute) = brute_force_cluster_edit(&g).unwrap();
    let order: Vec<u32> = (0..7).collect();
    let dp = exact_dp_weighted(&g, &order);
    assert_eq!(brute, 2.0);
    assert_eq!(dp.cost, 2.0);
    println!("criterion 2 PASS: optimal cost 2 from brute force and from the DP");
}

#[test]
fn criterion_03_exact_opcount() {
    for n in [2usize, 3, 10, 137, 1000, 10_000] {
        let g = generate_point_graph_with_rule(
            &PointGraphParams { n, l: 0.01, seed: 1 },
            DistanceWeight::Rational { l: 0.01 },
        );
        let order: Vec<u32> = (0..n as u32).collect();
        let sol = exact_dp_weighted(&g, &order);
        assert_eq!(sol.stats.opcount, (n as u64) * (n as u64 - 1) / 2, "n = {n}");
        if n == 10_000 {
            assert_eq!(sol.stats.opcount, 49_995_000);
        }
    }
    println!("criterion 3 PASS: inner-loop evaluations equal n(n-1)/2 up to n = 10,000 (49,995,000)");
}

struct TableRow {
    exact_cost: f64,
    exact_clusters: f64,
    cluster_size: f64,
    h1_cost: f64,
    h1_ops: f64,
    h2_cost: f64,
    h2_ops: f64,
}

fn bench_one(l: f64) -> TableRow {
    let report = bench_tables(&BenchParams { n: 10_000, l_values: vec![l], runs: 100, seed: 20_240_901 });
    let row = |algo: BenchAlgo| report.rows.iter().find(|r| r.algo == algo).unwrap();
    let exact = row(BenchAlgo::Exact);
    let h1 = row(BenchAlgo::FrontierPlusOne);
    let h2 = row(BenchAlgo::FrontierOrPositiveEdge);
    assert_eq!(exact.mean_opcount, 49_995_000.0);
    let t = TableRow {
        exact_cost: exact.mean_cost,
        exact_clusters: exact.mean_clusters,
        cluster_size: exact.mean_cluster_size,
        h1_cost: h1.mean_cost,
        h1_ops: h1.mean_opcount,
        h2_cost: h2.mean_cost,
        h2_ops: h2.mean_opcount,
    };
    // evaluations per vertex track the mean cluster size within a factor 2
    for ops in [t.h1_ops, t.h2_ops] {
        let per_vertex = ops / 10_000.0;
        assert!(
            per_vertex >= t.cluster_size / 2.0 && per_vertex <= t.cluster_size * 2.0,
            "l = {l}: {per_vertex} evaluations per vertex vs cluster size {}",
            t.cluster_size
        );
    }
    t
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn criterion_04a_table_l_0_1() {
    let t = bench_one(0.1);
    assert!(rel(t.exact_clusters, 6.121) <= 0.25, "mean clusters {}", t.exact_clusters);
    assert!(rel(t.h1_cost, t.exact_cost) <= 1e-6);
    assert!(rel(t.h2_cost, t.exact_cost) <= 1e-6);
    println!(
        "criterion 4 (l=0.1) PASS: clusters {:.3}, costs {:.3}/{:.3}/{:.3}",
        t.exact_clusters, t.exact_cost, t.h2_cost, t.h1_cost
    );
}

#[test]
fn criterion_04b_table_l_0_01() {
    let t = bench_one(0.01);
    assert!(rel(t.exact_clusters, 62.809) <= 0.10, "mean clusters {}", t.exact_clusters);
    assert!(rel(t.h2_cost, t.exact_cost) <= 0.001, "variant 2 gap {}", rel(t.h2_cost, t.exact_cost));
    assert!(rel(t.h1_cost, t.exact_cost) <= 0.005, "variant 1 gap {}", rel(t.h1_cost, t.exact_cost));
    for ops in [t.h1_ops, t.h2_ops] {
        assert!((0.5 * 1.52e6..=2.0 * 1.52e6).contains(&ops), "opcount {ops}");
    }
    println!(
        "criterion 4 (l=0.01) PASS: clusters {:.3}, gaps v2 {:.5} v1 {:.5}, ops {:.0}/{:.0}",
        t.exact_clusters,
        rel(t.h2_cost, t.exact_cost),
        rel(t.h1_cost, t.exact_cost),
        t.h2_ops,
        t.h1_ops
    );
}

#[test]
fn criterion_04c_table_l_0_001() {
    let t = bench_one(0.001);
    assert!(rel(t.exact_clusters, 644.327) <= 0.10, "mean clusters {}", t.exact_clusters);
    assert!(rel(t.h2_cost, t.exact_cost) <= 0.001, "variant 2 gap {}", rel(t.h2_cost, t.exact_cost));
    assert!(rel(t.h1_cost, t.exact_cost) <= 0.02, "variant 1 gap {}", rel(t.h1_cost, t.exact_cost));
    for ops in [t.h1_ops, t.h2_ops] {
        assert!((0.5 * 1.4e5..=2.0 * 1.4e5).contains(&ops), "opcount {ops}");
    }
    println!(
        "criterion 4 (l=0.001) PASS: clusters {:.3}, gaps v2 {:.5} v1 {:.5}, ops {:.0}/{:.0}",
        t.exact_clusters,
        rel(t.h2_cost, t.exact_cost),
        rel(t.h1_cost, t.exact_cost),
        t.h2_ops,
        t.h1_ops
    );
}

#[test]
fn criterion_05_heuristics_never_beat_exact() {
    let mut checked = 0usize;
    for seed in 0..1000u64 {
        let n = 2 + (seed as usize * 13) % 199; // 2..=200
        let g = dyadic_point_graph(n, 3000 + seed);
        let order: Vec<u32> = (0..n as u32).collect();
        let exact = exact_dp_weighted(&g, &order);
        for variant in [HeuristicVariant::FrontierPlusOne, HeuristicVariant::FrontierOrPositiveEdge] {
            let h = heuristic_dp(&g, &order, variant);
            let cost = clustering_cost(&g, &h.clustering).unwrap();
            assert!(
                cost >= exact.cost,
                "seed {seed} {variant:?}: heuristic {cost} under exact {}",
                exact.cost
            );
        }
        checked += 1;
    }
    println!("criterion 5 PASS: {checked} instances, both variants dominated by the exact cost");
}

#[test]
fn criterion_06_ordering_regression() {
    let (g, coordinate_order, leftmost) = interleaved_two_population();
    let order = nearest_neighbor_order(&g, leftmost);
    assert_eq!(order, vec![5, 6, 7, 8, 9, 4, 3, 2, 1, 0]);

    let adaptive = adaptive_cluster_edit(&g, leftmost);
    let expect = Clustering::new(vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]);
    assert!(adaptive.clustering.same_partition(&expect), "got {:?}", adaptive.clustering);
    let adaptive_cost = clustering_cost(&g, &adaptive.clustering).unwrap();
    let left_right = exact_dp_weighted(&g, &coordinate_order);
    assert!(
        adaptive_cost < left_right.cost,
        "adaptive {adaptive_cost} vs coordinate-order DP {}",
        left_right.cost
    );
    println!(
        "criterion 6 PASS: chain order recovered, two clusters at cost {adaptive_cost} < {}",
        left_right.cost
    );
}

#[test]
fn criterion_07_clique_sweep_matches_exhaustive_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut checked = 0usize;
    for round in 0..500 {
        let n = rng.random_range(1..=15);
        let mut reads: Vec<Read> = (0..n)
            .map(|i| Read::new(i as u64, rng.random_range(0.0..300.0), rng.random_range(5.0..100.0)))
            .collect();
        reads.sort_by(|a, b| (a.left, a.id).partial_cmp(&(b.left, b.id)).unwrap());
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if cledit::read::span_overlap(&reads[a], &reads[b]) > 0.0 {
                    edges.push((a as u32, b as u32, 1.0));
                }
            }
        }
        let g = WeightedGraph::from_edges(n, &edges).unwrap();
        let sweep = cledit::cliques::enumerate_maximal_cliques(&reads, &g, 100_000).unwrap();
        let mut got = sweep.cliques.clone();
        got.sort();
        assert_eq!(got, bron_kerbosch(&g), "round {round}");
        checked += 1;
    }
    println!("criterion 7 PASS: {checked} interval graphs, sweep output equals the exhaustive clique set");
}

/// Exhaustive maximal-clique oracle (plain Bron-Kerbosch).
fn bron_kerbosch(g: &WeightedGraph) -> Vec<Vec<u32>> {
    use cledit::graph::Graph;
    fn expand(g: &WeightedGraph, r: &mut Vec<u32>, mut p: Vec<u32>, mut x: Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        while let Some(v) = p.pop() {
            let adj = |u: &&u32| g.weight(v as usize, **u as usize).value() >= 0.0;
            let np: Vec<u32> = p.iter().filter(adj).copied().collect();
            let nx: Vec<u32> = x.iter().filter(adj).copied().collect();
            r.push(v);
            expand(g, r, np, nx, out);
            r.pop();
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(g, &mut Vec::new(), (0..g.vertex_count() as u32).collect(), Vec::new(), &mut out);
    out.sort();
    out
}

// ---- quadrature oracle for the normal tail ----

/// 20-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
const GL_X: [f64; 10] = [
    0.0765265211334973,
    0.2277858511416451,
    0.3737060887154195,
    0.5108670019508271,
    0.6360536807265150,
    0.7463319064601508,
    0.8391169718222188,
    0.9122344282513259,
    0.9639719272779138,
    0.9931285991850949,
];
const GL_W: [f64; 10] = [
    0.1527533871307258,
    0.1491729864726037,
    0.1420961093183820,
    0.1316886384491766,
    0.1181945319615184,
    0.1019301198172404,
    0.0832767415767048,
    0.0626720483341091,
    0.0406014298003869,
    0.0176140071391521,
];

fn gauss_panel(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut sum = 0.0;
    for k in 0..10 {
        sum += GL_W[k] * (f(mid + half * GL_X[k]) + f(mid - half * GL_X[k]));
    }
    sum * half
}

/// P(X >= x) by composite quadrature of the density over [x, x + 45]; the
/// remaining tail is below 1e-300.
fn sf_quadrature(x: f64) -> f64 {
    if x < 0.0 {
        return 1.0 - sf_quadrature(-x);
    }
    let density = |t: f64| (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let mut total = 0.0;
    for k in 0..45 {
        let a = x + k as f64;
        total += gauss_panel(density, a, a + 1.0);
    }
    total
}

#[test]
fn criterion_08_normal_tail_against_quadrature() {
    // oracle self-checks
    assert!((sf_quadrature(0.0) - 0.5).abs() < 1e-14);
    assert!((sf_quadrature(1.0) - 0.158_655_253_931_457_05).abs() < 1e-14);

    assert!((std_normal_sf(0.0) - 0.5).abs() <= 1e-15);
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let x = -10.0 + 20.0 * i as f64 / 999.0;
        let err = (std_normal_sf(x) - sf_quadrature(x)).abs();
        worst = worst.max(err);
    }
    assert!(worst <= 1e-12, "worst absolute error {worst}");
    println!("criterion 8 PASS: worst |sf - quadrature| = {worst:.2e} on the 1000-point grid");
}

#[test]
fn criterion_09_fdr_mechanics() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10_000 {
        let len = rng.random_range(0..=50);
        let pvalues: Vec<f64> = (0..len).map(|_| rng.random::<f64>()).collect();
        let total = (len + rng.random_range(0..20)).max(1);
        let rate = rng.random_range(0.01..=1.0f64);
        let got = bh_select(&pvalues, rate, total);
        // exhaustive largest-m search
        let mut idx: Vec<usize> = (0..len).collect();
        idx.sort_by(|&a, &b| pvalues[a].total_cmp(&pvalues[b]).then(a.cmp(&b)));
        let mut best = 0;
        for m in 1..=len {
            if pvalues[idx[m - 1]] <= rate * m as f64 / total as f64 {
                best = m;
            }
        }
        let mut expect = idx[..best].to_vec();
        expect.sort_unstable();
        assert_eq!(got, expect);
    }
    for round in 0..500 {
        let mut rng = ChaCha8Rng::seed_from_u64(1000 + round);
        let n = rng.random_range(0..80);
        let preds: Vec<Prediction> = (0..n)
            .map(|_| {
                let s = rng.random_range(0.0..1000.0);
                Prediction {
                    start: s,
                    end: s + rng.random_range(0.5..80.0),
                    kind: SvKind::Deletion,
                    p_value: rng.random(),
                    support: 1,
                }
            })
            .collect();
        let kept = remove_overlaps(preds);
        for i in 0..kept.len() {
            for j in i + 1..kept.len() {
                assert!(kept[i].end <= kept[j].start || kept[j].end <= kept[i].start);
            }
        }
    }
    println!("criterion 9 PASS: 10,000 step-up selections match exhaustive search; overlap removal always disjoint");
}

#[test]
fn criterion_10_adaptive_scales_to_a_million_reads() {
    let t0 = std::time::Instant::now();
    let params = AlignParams::default();
    let n = 1_000_000usize;
    // expected overlaps per read ~= 2 n mu / genome ~= 15
    let genome = 2.0 * n as f64 * params.mu / 15.0;
    let sim = simulate_reads(genome, &[], n, &params, 77).unwrap();
    let g = build_alignment_graph(&sim.reads, &params).unwrap();
    let built = t0.elapsed();
    let mean_deg = 2.0 * g.edge_count() as f64 / n as f64;
    let sol = adaptive_cluster_edit(&g, 0);
    let solved = t0.elapsed();
    assert!(sol.stats.peak_opt_entries <= 2 * n, "peak {} entries", sol.stats.peak_opt_entries);
    assert_eq!(sol.clustering.vertex_count(), n);
    assert!(solved.as_secs() < 300, "took {solved:?}, limit five minutes");
    println!(
        "criterion 10 PASS: n=10^6, mean degree {mean_deg:.1}, graph {built:?}, total {solved:?}, peak opt' {} = 2n",
        sol.stats.peak_opt_entries
    );
}

/// Supplementary recovery property: planted deletions come back out of the
/// full pipeline with the right length at adequate coverage.
#[test]
fn synthetic_deletion_recovery() {
    let params = AlignParams::default();
    let genome = 60_000.0;
    let deletions: Vec<cledit::pipeline::SimEvent> = [
        (5_000.0, 55.0),
        (15_000.0, 60.0),
        (25_000.0, 70.0),
        (35_000.0, 80.0),
        (45_000.0, 90.0),
        (55_000.0, 95.0),
    ]
    .iter()
    .map(|&(position, length)| cledit::pipeline::SimEvent { position, kind: SvKind::Deletion, length })
    .collect();
    // ~20x point coverage
    let n = (20.0 * genome / params.mu) as usize;
    let sim = simulate_reads(genome, &deletions, n, &params, 4242).unwrap();
    let g = build_alignment_graph(&sim.reads, &params).unwrap();
    let sol = adaptive_cluster_edit(&g, 0);
    let drafts: Vec<_> = sol
        .clustering
        .clusters
        .iter()
        .map(|c| summarize_cluster(c, &sim.reads, &params))
        .collect();
    let mut recovered = 0;
    for ev in &deletions {
        let hit = drafts.iter().any(|d| {
            d.kind == SvKind::Deletion
                && d.support >= 3
                && d.start <= ev.position
                && ev.position < d.end
                && (d.deviation - ev.length).abs() <= 2.0 * params.sigma / (d.support as f64).sqrt()
        });
        if hit {
            recovered += 1;
        }
    }
    assert!(
        recovered * 10 >= deletions.len() * 8,
        "recovered only {recovered} of {} deletions",
        deletions.len()
    );
    println!("recovery PASS: {recovered}/{} planted deletions recovered", deletions.len());
}
