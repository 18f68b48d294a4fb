//! Exact minimum cluster editing over consecutive clusters of a vertex order.
//!
//! `opt'(j, i)` is the cost of the best clustering of ranks `0..=j` whose
//! last cluster holds exactly `i + 1` vertices. Only two rows of `opt'` are
//! ever alive plus one argmin per prefix, so solves take O(n) space.
//! On a one-dimensional point graph in coordinate order the consecutive
//! optimum is the global optimum.

use crate::clustering::Clustering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weight::sat_add;

/// Per-solve instrumentation: inner-loop `opt'` evaluations and the peak
/// number of live `opt'` entries.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveStats {
    pub opcount: u64,
    pub peak_opt_entries: usize,
}

#[derive(Clone, Debug)]
pub struct ExactSolution {
    pub clustering: Clustering,
    /// True editing cost of the returned clustering.
    pub cost: f64,
    pub stats: SolveStats,
}

/// The two live `opt'` rows plus the per-prefix argmin record.
#[derive(Clone, Debug)]
pub struct DpFrontier {
    prev: Vec<f64>,
    cur: Vec<f64>,
    /// Explored prefix length of `prev`; entries beyond it are forbidden.
    prev_explored: usize,
    /// Smallest argmin of each finished row: `size[j] + 1` is the last
    /// cluster's size in the best clustering of ranks `0..=j`.
    pub size: Vec<u32>,
    /// Minimum of the previous row.
    pub opt_prev: f64,
}

impl DpFrontier {
    pub fn new(n: usize) -> DpFrontier {
        DpFrontier {
            prev: vec![0.0; n],
            cur: vec![0.0; n],
            prev_explored: 1,
            size: vec![0; n],
            opt_prev: 0.0,
        }
    }

    pub fn peak_entries(&self) -> usize {
        self.prev.len() + self.cur.len()
    }

    fn prev_entry(&self, i: usize, cap: f64) -> f64 {
        if i < self.prev_explored {
            self.prev[i]
        } else {
            cap
        }
    }

    /// One DP step at rank `j` for vertex `order[j]`, exploring `i` in
    /// `1..=bound`. `x` starts at `x_init` (the full positive-prefix sum for
    /// true costs, or zero when only the argmin matters). Returns the number
    /// of inner-loop evaluations.
    pub(crate) fn step<G: Graph>(&mut self, g: &G, order: &[u32], j: usize, bound: usize, x_init: f64) -> u64 {
        let cap = g.wmax();
        let vj = order[j] as usize;
        self.cur[0] = sat_add(x_init, self.opt_prev, cap);
        let mut best = self.cur[0];
        let mut best_i = 0u32;
        let mut x = x_init;
        let mut poisoned = false;
        for i in 1..=bound {
            let w = g.weight(vj, order[j - i] as usize);
            let entry = if w.is_neg_inf() {
                poisoned = true;
                cap
            } else if poisoned {
                cap
            } else {
                x -= w.value();
                sat_add(x, self.prev_entry(i - 1, cap), cap)
            };
            self.cur[i] = entry;
            if entry < best {
                best = entry;
                best_i = i as u32;
            }
        }
        self.size[j] = best_i;
        self.opt_prev = best;
        std::mem::swap(&mut self.prev, &mut self.cur);
        self.prev_explored = bound + 1;
        bound as u64
    }
}

pub(crate) fn assert_permutation(order: &[u32], n: usize) {
    assert_eq!(order.len(), n, "order length must equal the vertex count");
    let mut seen = vec![false; n];
    for &v in order {
        assert!((v as usize) < n && !seen[v as usize], "order is not a permutation of 0..{n}");
        seen[v as usize] = true;
    }
}

/// Inverse of a permutation: `rank[v]` is the position of vertex `v`.
pub(crate) fn ranks_of(order: &[u32]) -> Vec<u32> {
    let mut rank = vec![0u32; order.len()];
    for (j, &v) in order.iter().enumerate() {
        rank[v as usize] = j as u32;
    }
    rank
}

/// Minimum-cost clustering among those whose clusters are consecutive runs
/// of `order`. The returned cost is the true editing cost; the inner loop
/// always evaluates `n (n - 1) / 2` entries.
pub fn exact_dp_weighted<G: Graph>(g: &G, order: &[u32]) -> ExactSolution {
    let n = g.vertex_count();
    assert_permutation(order, n);
    if n == 0 {
        return ExactSolution { clustering: Clustering::default(), cost: 0.0, stats: SolveStats::default() };
    }
    let rank = ranks_of(order);
    let mut fr = DpFrontier::new(n);
    let mut opcount = 0u64;
    for j in 1..n {
        let vj = order[j] as usize;
        // X starts at the sum of positive parts over earlier-ranked pairs,
        // so that opt(j) is the real cost of the best prefix clustering.
        let mut x = 0.0;
        for u in g.neighbours(vj) {
            if (rank[u] as usize) < j {
                x += g.weight(vj, u).pos_part();
            }
        }
        opcount += fr.step(g, order, j, j, x);
    }
    let clustering = extract_clusters(&fr.size, order).expect("solver size array is well-formed");
    ExactSolution {
        clustering,
        cost: fr.opt_prev,
        stats: SolveStats { opcount, peak_opt_entries: fr.peak_entries() },
    }
}

/// Unweighted special case over a 1D point graph in coordinate order: the
/// per-step cost is `|i - d_j|` where `d_j` counts the (consecutive)
/// earlier neighbours of vertex `j`.
#[allow(clippy::needless_range_loop)] // j drives reads at j-1 and writes at j
pub fn exact_dp_unweighted<G: Graph>(g: &G) -> (Clustering, f64) {
    let n = g.vertex_count();
    if n == 0 {
        return (Clustering::default(), 0.0);
    }
    let mut prev = vec![0.0f64; n];
    let mut cur = vec![0.0f64; n];
    let mut size = vec![0u32; n];
    let mut opt_prev = 0.0f64;
    for j in 1..n {
        let d = g.neighbours(j).filter(|&u| u < j && g.weight(j, u).value() >= 0.0).count() as f64;
        cur[0] = opt_prev + d;
        let mut best = cur[0];
        let mut best_i = 0u32;
        for i in 1..=j {
            let entry = prev[i - 1] + (i as f64 - d).abs();
            cur[i] = entry;
            if entry < best {
                best = entry;
                best_i = i as u32;
            }
        }
        size[j] = best_i;
        opt_prev = best;
        std::mem::swap(&mut prev, &mut cur);
    }
    let order: Vec<u32> = (0..n as u32).collect();
    let clustering = extract_clusters(&size, &order).expect("size array is well-formed");
    (clustering, opt_prev)
}

/// Walks the argmin record right to left, cutting a cluster of
/// `size[j] + 1` ranks each time, down to and including rank 0.
pub fn extract_clusters(size: &[u32], order: &[u32]) -> Result<Clustering> {
    if size.len() != order.len() {
        return Err(Error::InvalidInput(format!(
            "size array length {} does not match order length {}",
            size.len(),
            order.len()
        )));
    }
    for (index, &s) in size.iter().enumerate() {
        if s as usize > index {
            return Err(Error::MalformedSizeArray { index, size: s as usize });
        }
    }
    let mut clusters = Vec::new();
    let mut j = size.len() as i64 - 1;
    while j >= 0 {
        let lo = j - size[j as usize] as i64;
        clusters.push(order[lo as usize..=j as usize].to_vec());
        j = lo - 1;
    }
    clusters.reverse();
    Ok(Clustering::new(clusters))
}
