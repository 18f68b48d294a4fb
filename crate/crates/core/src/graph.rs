//! Weighted graphs over reads or one-dimensional points.
//!
//! Two backings share one interface: [`WeightedGraph`] stores the finite
//! pairs explicitly (read-alignment graphs, hand-built test graphs), while
//! [`PointGraph`] keeps only sorted point positions and evaluates a
//! distance-to-weight rule on demand, so a complete graph on 10^4 points
//! costs 80 kB instead of 800 MB. Lookup semantics are identical; only the
//! neighbour lists of a point graph are restricted to pairs at or above a
//! materialization floor (<= 0, so every non-negative pair is always listed).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::read::{pair_weight_unchecked, AlignParams, Read};
use crate::weight::{Weight, W_MAX};

/// Vertex-indexed access to pair weights and to the finite-pair neighbour
/// lists. Neighbours iterate in ascending vertex order.
pub trait Graph {
    fn vertex_count(&self) -> usize;
    /// Extended weight of the unordered pair `{a, b}`.
    fn weight(&self, a: usize, b: usize) -> Weight;
    /// Vertices whose pair with `v` is stored (finite, or above the
    /// materialization floor for point graphs), ascending.
    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_;
    /// Saturation cap in force for this graph's weights and cost sums.
    fn wmax(&self) -> f64;
}

/// An undirected edge with its weight, as exchanged with builders and dumps.
pub type WeightedEdge = (u32, u32, f64);

/// Explicit weighted graph: per-vertex sorted neighbour lists with a
/// parallel weight array. Pairs that are absent weigh minus infinity.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    offsets: Vec<usize>,
    nbr: Vec<u32>,
    wts: Vec<f64>,
    wmax: f64,
}

impl WeightedGraph {
    /// Builds a graph from undirected edges `(a, b, weight)`. Self-pairs,
    /// out-of-range ids, duplicate pairs and non-finite weights are rejected;
    /// weights are clamped to the cap.
    pub fn from_edges(n: usize, edges: &[WeightedEdge]) -> Result<WeightedGraph> {
        Self::from_edges_capped(n, edges, W_MAX)
    }

    pub fn from_edges_capped(n: usize, edges: &[WeightedEdge], wmax: f64) -> Result<WeightedGraph> {
        let mut deg = vec![0usize; n];
        for &(a, b, w) in edges {
            if a as usize >= n || b as usize >= n {
                return Err(Error::InvalidInput(format!("edge ({a}, {b}) out of range for {n} vertices")));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("self-pair ({a}, {a}) is not allowed")));
            }
            if !w.is_finite() {
                return Err(Error::InvalidInput(format!(
                    "edge ({a}, {b}) has non-finite weight {w}; omit the pair instead"
                )));
            }
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        let mut offsets = vec![0usize; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut nbr = vec![0u32; offsets[n]];
        let mut wts = vec![0f64; offsets[n]];
        let mut fill = offsets.clone();
        for &(a, b, w) in edges {
            let w = w.clamp(-wmax, wmax);
            nbr[fill[a as usize]] = b;
            wts[fill[a as usize]] = w;
            fill[a as usize] += 1;
            nbr[fill[b as usize]] = a;
            wts[fill[b as usize]] = w;
            fill[b as usize] += 1;
        }
        // sort each adjacency by partner id, keeping weights aligned
        for v in 0..n {
            let range = offsets[v]..offsets[v + 1];
            let mut idx: Vec<usize> = range.clone().collect();
            idx.sort_unstable_by_key(|&i| nbr[i]);
            let sorted_n: Vec<u32> = idx.iter().map(|&i| nbr[i]).collect();
            let sorted_w: Vec<f64> = idx.iter().map(|&i| wts[i]).collect();
            nbr[range.clone()].copy_from_slice(&sorted_n);
            wts[range.clone()].copy_from_slice(&sorted_w);
            for pair in nbr[range].windows(2) {
                if pair[0] == pair[1] {
                    return Err(Error::InvalidInput(format!("duplicate edge ({v}, {})", pair[0])));
                }
            }
        }
        Ok(WeightedGraph { offsets, nbr, wts, wmax })
    }

    pub fn edge_count(&self) -> usize {
        self.nbr.len() / 2
    }

    /// Stored pairs with `a < b`, for dumps.
    pub fn stored_pairs(&self) -> impl Iterator<Item = WeightedEdge> + '_ {
        (0..self.vertex_count()).flat_map(move |v| {
            let range = self.offsets[v]..self.offsets[v + 1];
            self.nbr[range.clone()]
                .iter()
                .zip(&self.wts[range])
                .filter(move |(&u, _)| (v as u32) < u)
                .map(move |(&u, &w)| (v as u32, u, w))
        })
    }
}

impl Graph for WeightedGraph {
    fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    fn weight(&self, a: usize, b: usize) -> Weight {
        debug_assert!(a != b);
        let range = self.offsets[a]..self.offsets[a + 1];
        match self.nbr[range.clone()].binary_search(&(b as u32)) {
            Ok(i) => Weight::capped(self.wts[range][i], self.wmax),
            Err(_) => Weight::NEG_INF,
        }
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.nbr[self.offsets[v]..self.offsets[v + 1]].iter().map(|&u| u as usize)
    }

    fn wmax(&self) -> f64 {
        self.wmax
    }
}

/// Distance-to-weight rule of a point graph.
#[derive(Clone, Copy, Debug)]
pub enum DistanceWeight {
    /// `(l^2 - a^2) / (l * a)`: unbounded near zero (capped), zero at `l`,
    /// negative and unbounded beyond.
    Rational { l: f64 },
    /// `+1` within the threshold distance, `-1` beyond: the unweighted case.
    Step { l: f64 },
    /// `Rational` rounded down to multiples of `grid` and clamped to
    /// `[-QUANT_CLAMP, QUANT_CLAMP]`, so that every weight and every sum of
    /// weights is exactly representable in an f64.
    QuantizedRational { l: f64, grid: f64 },
}

/// Magnitude clamp of the quantized rule; small enough that thousands of
/// terms still add exactly in f64.
pub const QUANT_CLAMP: f64 = 1024.0;

impl DistanceWeight {
    pub fn threshold(&self) -> f64 {
        match *self {
            DistanceWeight::Rational { l }
            | DistanceWeight::Step { l }
            | DistanceWeight::QuantizedRational { l, .. } => l,
        }
    }

    fn eval(&self, dist: f64, cap: f64) -> Weight {
        match *self {
            DistanceWeight::Rational { l } => f_l_weight_capped(dist, l, cap),
            DistanceWeight::Step { l } => Weight::capped(if dist <= l { 1.0 } else { -1.0 }, cap),
            DistanceWeight::QuantizedRational { l, grid } => {
                if dist == 0.0 {
                    return Weight::capped(QUANT_CLAMP, cap);
                }
                let raw = (l * l - dist * dist) / (l * dist);
                let q = (raw / grid).floor() * grid;
                Weight::capped(q.clamp(-QUANT_CLAMP, QUANT_CLAMP), cap)
            }
        }
    }

    /// Largest distance whose weight can still reach `floor`.
    fn radius_for_floor(&self, floor: f64) -> f64 {
        match *self {
            DistanceWeight::Rational { l } => rational_radius(l, floor),
            // one grid step of slack: the rounded value may sit just under
            // the unrounded one
            DistanceWeight::QuantizedRational { l, grid } => rational_radius(l, floor - grid),
            DistanceWeight::Step { l } => {
                if floor <= -1.0 {
                    f64::INFINITY
                } else {
                    l
                }
            }
        }
    }
}

/// Positive root of `a^2 + floor * l * a - l^2 = 0`, i.e. the distance where
/// the rational rule crosses `floor`.
fn rational_radius(l: f64, floor: f64) -> f64 {
    l * 0.5 * (-floor + (floor * floor + 4.0).sqrt())
}

/// Distance-to-weight map used by the synthetic benchmark: capped at the top
/// near zero distance, zero exactly at the threshold distance, strictly
/// decreasing.
pub fn f_l_weight(a: f64, l: f64) -> Weight {
    f_l_weight_capped(a, l, W_MAX)
}

pub fn f_l_weight_capped(a: f64, l: f64, cap: f64) -> Weight {
    assert!(a >= 0.0 && l > 0.0, "need a >= 0 and l > 0");
    if a == 0.0 {
        Weight::capped(f64::INFINITY, cap)
    } else {
        Weight::capped((l * l - a * a) / (l * a), cap)
    }
}

/// One-dimensional points with lazily evaluated pairwise weights.
#[derive(Clone, Debug)]
pub struct PointGraph {
    positions: Vec<f64>,
    rule: DistanceWeight,
    radius: f64,
    wmax: f64,
}

impl PointGraph {
    /// `positions` must be sorted ascending. Neighbour lists cover every
    /// pair weighing at least the floor (default 0, i.e. all edges).
    pub fn new(positions: Vec<f64>, rule: DistanceWeight) -> PointGraph {
        Self::with_floor(positions, rule, 0.0)
    }

    pub fn with_floor(positions: Vec<f64>, rule: DistanceWeight, floor: f64) -> PointGraph {
        assert!(floor <= 0.0, "floor must not hide non-negative pairs");
        assert!(rule.threshold() > 0.0, "threshold distance must be positive");
        assert!(positions.windows(2).all(|p| p[0] <= p[1]), "positions must be sorted");
        let radius = rule.radius_for_floor(floor);
        PointGraph { positions, rule, radius, wmax: W_MAX }
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    fn window(&self, v: usize) -> (usize, usize) {
        let x = self.positions[v];
        let lo = self.positions.partition_point(|&p| p < x - self.radius);
        let hi = self.positions.partition_point(|&p| p <= x + self.radius);
        (lo, hi)
    }
}

impl Graph for PointGraph {
    fn vertex_count(&self) -> usize {
        self.positions.len()
    }

    fn weight(&self, a: usize, b: usize) -> Weight {
        debug_assert!(a != b);
        self.rule.eval((self.positions[a] - self.positions[b]).abs(), self.wmax)
    }

    fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let (lo, hi) = self.window(v);
        (lo..hi).filter(move |&u| u != v)
    }

    fn wmax(&self) -> f64 {
        self.wmax
    }
}

/// Parameters of the uniform [0, 1] point generator.
#[derive(Clone, Copy, Debug)]
pub struct PointGraphParams {
    pub n: usize,
    /// Threshold distance; must be positive.
    pub l: f64,
    pub seed: u64,
}

/// Places `n` points i.i.d. uniformly on [0, 1], sorted, and weights every
/// pair by the rational rule on their distance. Deterministic per seed.
pub fn generate_point_graph(p: &PointGraphParams) -> PointGraph {
    generate_point_graph_with_rule(p, DistanceWeight::Rational { l: p.l })
}

pub fn generate_point_graph_with_rule(p: &PointGraphParams, rule: DistanceWeight) -> PointGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut positions: Vec<f64> = (0..p.n).map(|_| rng.random::<f64>()).collect();
    positions.sort_unstable_by(f64::total_cmp);
    PointGraph::new(positions, rule)
}

/// Validates the read-list contract for graph building: sorted by left
/// endpoint (ties by id), unique ids, positive lengths.
pub fn validate_reads(reads: &[Read]) -> Result<()> {
    for (i, r) in reads.iter().enumerate() {
        if !(r.length > 0.0) {
            return Err(Error::InvalidReadLength(r.id));
        }
        if i > 0 {
            let prev = &reads[i - 1];
            if (r.left, r.id) < (prev.left, prev.id) {
                return Err(Error::UnsortedReads(i));
            }
        }
    }
    let mut ids: Vec<u64> = reads.iter().map(|r| r.id).collect();
    ids.sort_unstable();
    for pair in ids.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DuplicateReadId(pair[0]));
        }
    }
    Ok(())
}

/// Builds the read-alignment graph: exactly the positionally overlapping
/// pairs get stored weights. A single sweep over the sorted reads visits
/// each overlapping pair once, so the cost is O(n k) for k overlaps per
/// read.
pub fn build_alignment_graph(reads: &[Read], p: &AlignParams) -> Result<WeightedGraph> {
    p.validate()?;
    validate_reads(reads)?;
    let n = reads.len();
    let mut edges: Vec<WeightedEdge> = Vec::new();
    for j in 0..n {
        let right = reads[j].right();
        for k in j + 1..n {
            if reads[k].left >= right {
                break;
            }
            let w = pair_weight_unchecked(&reads[j], &reads[k], p);
            debug_assert!(!w.is_neg_inf());
            edges.push((j as u32, k as u32, w.value()));
        }
    }
    WeightedGraph::from_edges_capped(n, &edges, p.wmax)
}
