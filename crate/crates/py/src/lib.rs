//! Python bindings: the graph builders, solvers and pipeline stages, with
//! clusters as plain lists of vertex lists and minus infinity mapped to
//! `float("-inf")`.

// `!(x > 0.0)` in validations is deliberate: NaN must fail the check too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use cledit::clustering::{clustering_cost as cost_of, Clustering};
use cledit::dp::{exact_dp_unweighted, exact_dp_weighted};
use cledit::graph::{
    build_alignment_graph, f_l_weight, generate_point_graph, DistanceWeight, Graph, PointGraph,
    PointGraphParams, WeightedGraph,
};
use cledit::heuristics::{heuristic_dp, HeuristicVariant};
use cledit::ordering::{adaptive_cluster_edit, lookahead_order, nearest_neighbor_order};
use cledit::pipeline::{
    attach_pvalues, bh_select, remove_overlaps, simulate_reads, summarize_cluster, Prediction,
    PvalueSource, SimEvent, SvKind,
};
use cledit::read::{pair_weight, AlignParams, Read, SignConvention};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Read", from_py_object)]
#[derive(Clone)]
struct PyRead {
    inner: Read,
}

#[pymethods]
impl PyRead {
    #[new]
    fn new(id: u64, left: f64, length: f64) -> PyRead {
        PyRead { inner: Read::new(id, left, length) }
    }

    #[getter]
    fn id(&self) -> u64 {
        self.inner.id
    }

    #[getter]
    fn left(&self) -> f64 {
        self.inner.left
    }

    #[getter]
    fn length(&self) -> f64 {
        self.inner.length
    }

    fn __repr__(&self) -> String {
        format!("Read(id={}, left={}, length={})", self.inner.id, self.inner.left, self.inner.length)
    }
}

#[pyclass(name = "AlignParams", from_py_object)]
#[derive(Clone)]
struct PyAlignParams {
    inner: AlignParams,
}

#[pymethods]
impl PyAlignParams {
    #[new]
    #[pyo3(signature = (mu=112.0, sigma=15.0, threshold=0.4, weight_sign="corrected", wmax=1e15))]
    fn new(mu: f64, sigma: f64, threshold: f64, weight_sign: &str, wmax: f64) -> PyResult<Self> {
        let sign = match weight_sign {
            "corrected" => SignConvention::Corrected,
            "paper" => SignConvention::Paper,
            other => return Err(value_err(format!("weight_sign must be corrected or paper, got {other:?}"))),
        };
        let inner = AlignParams::new(mu, sigma, threshold)
            .map_err(value_err)?
            .with_sign(sign)
            .with_wmax(wmax);
        inner.validate().map_err(value_err)?;
        Ok(PyAlignParams { inner })
    }

    #[getter]
    fn mu(&self) -> f64 {
        self.inner.mu
    }

    #[getter]
    fn sigma(&self) -> f64 {
        self.inner.sigma
    }

    #[getter]
    fn threshold(&self) -> f64 {
        self.inner.threshold
    }
}

enum Backing {
    Sparse(WeightedGraph),
    Points(PointGraph),
}

/// A weighted graph over reads, explicit edges or 1D points.
#[pyclass(name = "Graph")]
struct PyGraph {
    backing: Backing,
}

macro_rules! on_graph {
    ($slf:expr, $g:ident => $body:expr) => {
        match &$slf.backing {
            Backing::Sparse($g) => $body,
            Backing::Points($g) => $body,
        }
    };
}

#[pymethods]
impl PyGraph {
    fn vertex_count(&self) -> usize {
        on_graph!(self, g => g.vertex_count())
    }

    /// Extended weight of a pair; minus infinity for non-overlapping pairs.
    fn weight(&self, a: usize, b: usize) -> PyResult<f64> {
        let n = self.vertex_count();
        if a >= n || b >= n || a == b {
            return Err(value_err(format!("invalid pair ({a}, {b}) for {n} vertices")));
        }
        Ok(on_graph!(self, g => g.weight(a, b).value()))
    }

    fn neighbours(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.vertex_count() {
            return Err(value_err(format!("vertex {v} out of range")));
        }
        Ok(on_graph!(self, g => g.neighbours(v).collect()))
    }

    /// Sorted point positions, for point graphs only.
    fn positions(&self) -> Option<Vec<f64>> {
        match &self.backing {
            Backing::Points(g) => Some(g.positions().to_vec()),
            Backing::Sparse(_) => None,
        }
    }

    fn __repr__(&self) -> String {
        format!("Graph(vertices={})", self.vertex_count())
    }
}

fn check_order(order: &[u32], n: usize) -> PyResult<()> {
    if order.len() != n {
        return Err(value_err(format!("order lists {} vertices, graph has {n}", order.len())));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v as usize >= n || std::mem::replace(&mut seen[v as usize], true) {
            return Err(value_err("order is not a permutation of the vertices"));
        }
    }
    Ok(())
}

fn order_or_identity(order: Option<Vec<u32>>, n: usize) -> PyResult<Vec<u32>> {
    match order {
        Some(o) => {
            check_order(&o, n)?;
            Ok(o)
        }
        None => Ok((0..n as u32).collect()),
    }
}

fn check_start(start: usize, n: usize) -> PyResult<()> {
    if n > 0 && start >= n {
        return Err(value_err(format!("start vertex {start} out of range for {n} vertices")));
    }
    Ok(())
}

#[pyfunction]
fn std_normal_sf(x: f64) -> f64 {
    cledit::std_normal_sf(x)
}

#[pyfunction(name = "f_l_weight")]
fn f_l_weight_py(a: f64, l: f64) -> PyResult<f64> {
    if !(a >= 0.0 && l > 0.0) {
        return Err(value_err("need a >= 0 and l > 0"));
    }
    Ok(f_l_weight(a, l).value())
}

#[pyfunction(name = "pair_weight")]
fn pair_weight_py(a: &PyRead, b: &PyRead, params: &PyAlignParams) -> PyResult<f64> {
    Ok(pair_weight(&a.inner, &b.inner, &params.inner).map_err(value_err)?.value())
}

#[pyfunction(name = "build_alignment_graph")]
fn build_alignment_graph_py(reads: Vec<PyRead>, params: &PyAlignParams) -> PyResult<PyGraph> {
    let reads: Vec<Read> = reads.into_iter().map(|r| r.inner).collect();
    let g = build_alignment_graph(&reads, &params.inner).map_err(value_err)?;
    Ok(PyGraph { backing: Backing::Sparse(g) })
}

#[pyfunction]
fn graph_from_edges(n: usize, edges: Vec<(u32, u32, f64)>) -> PyResult<PyGraph> {
    let g = WeightedGraph::from_edges(n, &edges).map_err(value_err)?;
    Ok(PyGraph { backing: Backing::Sparse(g) })
}

#[pyfunction(name = "generate_point_graph")]
fn generate_point_graph_py(n: usize, l: f64, seed: u64) -> PyResult<PyGraph> {
    if !(l > 0.0) {
        return Err(value_err("l must be positive"));
    }
    let g = generate_point_graph(&PointGraphParams { n, l, seed });
    Ok(PyGraph { backing: Backing::Points(g) })
}

#[pyfunction]
fn unweighted_point_graph(positions: Vec<f64>, l: f64) -> PyResult<PyGraph> {
    if !(l > 0.0) {
        return Err(value_err("l must be positive"));
    }
    if !positions.windows(2).all(|p| p[0] <= p[1]) {
        return Err(value_err("positions must be sorted ascending"));
    }
    Ok(PyGraph { backing: Backing::Points(PointGraph::new(positions, DistanceWeight::Step { l })) })
}

/// Minimum-cost consecutive clustering of the order: (clusters, cost, opcount).
#[pyfunction]
#[pyo3(signature = (graph, order=None))]
fn cluster_exact(graph: &PyGraph, order: Option<Vec<u32>>) -> PyResult<(Vec<Vec<u32>>, f64, u64)> {
    let order = order_or_identity(order, graph.vertex_count())?;
    let sol = on_graph!(graph, g => exact_dp_weighted(g, &order));
    Ok((sol.clustering.clusters, sol.cost, sol.stats.opcount))
}

/// Unweighted exact DP over a +-1 point graph in coordinate order.
#[pyfunction]
fn cluster_exact_unweighted(graph: &PyGraph) -> (Vec<Vec<u32>>, f64) {
    let (c, cost) = on_graph!(graph, g => exact_dp_unweighted(g));
    (c.clusters, cost)
}

/// Frontier heuristic: variant "h1" (previous argmin + 1) or "h2"
/// (additionally the deepest positive edge). Returns (clusters, opcount).
#[pyfunction]
#[pyo3(signature = (graph, variant="h2", order=None))]
fn cluster_heuristic(graph: &PyGraph, variant: &str, order: Option<Vec<u32>>) -> PyResult<(Vec<Vec<u32>>, u64)> {
    let v = match variant {
        "h1" => HeuristicVariant::FrontierPlusOne,
        "h2" => HeuristicVariant::FrontierOrPositiveEdge,
        other => return Err(value_err(format!("variant must be h1 or h2, got {other:?}"))),
    };
    let order = order_or_identity(order, graph.vertex_count())?;
    let sol = on_graph!(graph, g => heuristic_dp(g, &order, v));
    Ok((sol.clustering.clusters, sol.stats.opcount))
}

/// Combined order construction and frontier DP. Returns (clusters, opcount).
#[pyfunction]
#[pyo3(signature = (graph, start=0))]
fn cluster_adaptive(graph: &PyGraph, start: usize) -> PyResult<(Vec<Vec<u32>>, u64)> {
    check_start(start, graph.vertex_count())?;
    let sol = on_graph!(graph, g => adaptive_cluster_edit(g, start));
    Ok((sol.clustering.clusters, sol.stats.opcount))
}

#[pyfunction(name = "clustering_cost")]
fn clustering_cost_py(graph: &PyGraph, clusters: Vec<Vec<u32>>) -> PyResult<f64> {
    let c = Clustering::new(clusters);
    on_graph!(graph, g => cost_of(g, &c)).map_err(value_err)
}

#[pyfunction]
fn brute_force(graph: &PyGraph) -> PyResult<(Vec<Vec<u32>>, f64)> {
    let (c, cost) = on_graph!(graph, g => cledit::oracle::brute_force_cluster_edit(g)).map_err(value_err)?;
    Ok((c.clusters, cost))
}

#[pyfunction]
#[pyo3(signature = (graph, start=0))]
fn greedy_order(graph: &PyGraph, start: usize) -> PyResult<Vec<u32>> {
    check_start(start, graph.vertex_count())?;
    if graph.vertex_count() == 0 {
        return Ok(Vec::new());
    }
    Ok(on_graph!(graph, g => nearest_neighbor_order(g, start)))
}

#[pyfunction]
#[pyo3(signature = (graph, h, start=0))]
fn lookahead_order_py(graph: &PyGraph, h: usize, start: usize) -> PyResult<Vec<u32>> {
    if h == 0 {
        return Err(value_err("h must be at least 1"));
    }
    check_start(start, graph.vertex_count())?;
    if graph.vertex_count() == 0 {
        return Ok(Vec::new());
    }
    Ok(on_graph!(graph, g => lookahead_order(g, h, start)))
}

#[pyfunction]
#[pyo3(signature = (reads, params, max_active=cledit::cliques::DEFAULT_ACTIVE_CAP))]
fn maximal_cliques(reads: Vec<PyRead>, params: &PyAlignParams, max_active: usize) -> PyResult<Vec<Vec<u32>>> {
    let reads: Vec<Read> = reads.into_iter().map(|r| r.inner).collect();
    let g = build_alignment_graph(&reads, &params.inner).map_err(value_err)?;
    let cs = cledit::cliques::enumerate_maximal_cliques(&reads, &g, max_active).map_err(value_err)?;
    Ok(cs.cliques)
}

#[pyfunction(name = "bh_select")]
fn bh_select_py(pvalues: Vec<f64>, rate: f64, total: usize) -> PyResult<Vec<usize>> {
    if !(rate > 0.0 && rate <= 1.0) {
        return Err(value_err(format!("rate must be in (0, 1], got {rate}")));
    }
    if total < pvalues.len() {
        return Err(value_err("total candidate count below the list length"));
    }
    Ok(bh_select(&pvalues, rate, total))
}

type PredTuple = (f64, f64, String, f64, usize);

fn pred_from_tuple(t: &PredTuple) -> PyResult<Prediction> {
    let kind = match t.2.as_str() {
        "insertion" => SvKind::Insertion,
        "deletion" => SvKind::Deletion,
        other => return Err(value_err(format!("kind must be insertion or deletion, got {other:?}"))),
    };
    Ok(Prediction { start: t.0, end: t.1, kind, p_value: t.3, support: t.4 })
}

/// Greedy disjointness filter over (start, end, kind, p_value, support)
/// tuples; keeps the lowest p-values.
#[pyfunction(name = "remove_overlaps")]
fn remove_overlaps_py(predictions: Vec<PredTuple>) -> PyResult<Vec<PredTuple>> {
    let preds: PyResult<Vec<Prediction>> = predictions.iter().map(pred_from_tuple).collect();
    Ok(remove_overlaps(preds?)
        .into_iter()
        .map(|p| (p.start, p.end, p.kind.to_string(), p.p_value, p.support))
        .collect())
}

/// Summaries of the clusters of a read list, with placeholder or external
/// p-values: returns (start, end, kind, p_value, support) tuples.
#[pyfunction]
#[pyo3(signature = (clusters, reads, params, pvalues=None))]
fn predictions_from_clusters(
    clusters: Vec<Vec<u32>>,
    reads: Vec<PyRead>,
    params: &PyAlignParams,
    pvalues: Option<Vec<f64>>,
) -> PyResult<Vec<PredTuple>> {
    let reads: Vec<Read> = reads.into_iter().map(|r| r.inner).collect();
    let n = reads.len() as u32;
    for cluster in &clusters {
        if cluster.is_empty() {
            return Err(value_err("empty cluster"));
        }
        if cluster.iter().any(|&v| v >= n) {
            return Err(value_err("cluster references a vertex out of range"));
        }
    }
    let drafts: Vec<_> = clusters.iter().map(|c| summarize_cluster(c, &reads, &params.inner)).collect();
    let source = match &pvalues {
        Some(ps) => PvalueSource::External(ps),
        None => PvalueSource::PlaceholderZTest { sigma: params.inner.sigma },
    };
    let preds = attach_pvalues(&drafts, source).map_err(value_err)?;
    Ok(preds.into_iter().map(|p| (p.start, p.end, p.kind.to_string(), p.p_value, p.support)).collect())
}

/// Simulated reads over planted events given as (position, kind, length)
/// tuples. Returns the sorted reads.
#[pyfunction(name = "simulate_reads")]
fn simulate_reads_py(
    genome_length: f64,
    events: Vec<(f64, String, f64)>,
    n: usize,
    params: &PyAlignParams,
    seed: u64,
) -> PyResult<Vec<PyRead>> {
    let events: PyResult<Vec<SimEvent>> = events
        .iter()
        .map(|(pos, kind, len)| {
            let kind = match kind.as_str() {
                "insertion" => SvKind::Insertion,
                "deletion" => SvKind::Deletion,
                other => return Err(value_err(format!("kind must be insertion or deletion, got {other:?}"))),
            };
            Ok(SimEvent { position: *pos, kind, length: *len })
        })
        .collect();
    let sim = simulate_reads(genome_length, &events?, n, &params.inner, seed).map_err(value_err)?;
    Ok(sim.reads.into_iter().map(|r| PyRead { inner: r }).collect())
}

#[pymodule]
fn cledit_rs(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRead>()?;
    m.add_class::<PyAlignParams>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(std_normal_sf, m)?)?;
    m.add_function(wrap_pyfunction!(f_l_weight_py, m)?)?;
    m.add_function(wrap_pyfunction!(pair_weight_py, m)?)?;
    m.add_function(wrap_pyfunction!(build_alignment_graph_py, m)?)?;
    m.add_function(wrap_pyfunction!(graph_from_edges, m)?)?;
    m.add_function(wrap_pyfunction!(generate_point_graph_py, m)?)?;
    m.add_function(wrap_pyfunction!(unweighted_point_graph, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_exact, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_exact_unweighted, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_heuristic, m)?)?;
    m.add_function(wrap_pyfunction!(cluster_adaptive, m)?)?;
    m.add_function(wrap_pyfunction!(clustering_cost_py, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_order, m)?)?;
    m.add_function(wrap_pyfunction!(lookahead_order_py, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(bh_select_py, m)?)?;
    m.add_function(wrap_pyfunction!(remove_overlaps_py, m)?)?;
    m.add_function(wrap_pyfunction!(predictions_from_clusters, m)?)?;
    m.add_function(wrap_pyfunction!(simulate_reads_py, m)?)?;
    Ok(())
}
