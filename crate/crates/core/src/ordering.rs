//! Order-finding heuristics and the combined order-and-cluster solver.
//!
//! Scanning vertices left to right misbehaves when two populations of reads
//! interleave positionally but differ in insert size: the good clusters are
//! not consecutive in coordinate order. Greedy chaining by edge weight
//! (optionally scoring against several recent vertices) recovers an order in
//! which they are, and the final solver grows the order and the frontier DP
//! in lockstep so that each candidate is scored against exactly the current
//! last cluster.

use crate::clustering::Clustering;
use crate::dp::{extract_clusters, DpFrontier, SolveStats};
use crate::graph::Graph;
use crate::heuristics::HeuristicSolution;

/// Order under construction: the permutation so far, the assigned flags and
/// the fallback cursor.
struct OrderState {
    order: Vec<u32>,
    assigned: Vec<bool>,
    next_scan: usize,
}

impl OrderState {
    fn new(n: usize, start: usize) -> OrderState {
        assert!(start < n, "start vertex {start} out of range for {n} vertices");
        let mut st = OrderState { order: Vec::with_capacity(n), assigned: vec![false; n], next_scan: 0 };
        st.assign(start);
        st
    }

    fn assign(&mut self, v: usize) {
        debug_assert!(!self.assigned[v]);
        self.assigned[v] = true;
        self.order.push(v as u32);
    }

    /// Lowest-index unassigned vertex. The cursor never moves backwards
    /// (vertices are never unassigned), so all calls together cost O(n).
    fn anyvertex(&mut self) -> usize {
        while self.assigned[self.next_scan] {
            self.next_scan += 1;
        }
        self.next_scan
    }

    /// Best unassigned neighbour of the latest vertex, scored by summed
    /// weight against the last `window` order entries. Ties break towards
    /// the smallest vertex id; a minus-infinity score wins only when no
    /// finite one exists.
    fn best_candidate<G: Graph>(&self, g: &G, window: usize) -> Option<usize> {
        let j = self.order.len();
        let prev = self.order[j - 1] as usize;
        let span = window.min(j);
        let mut best: Option<(f64, usize)> = None;
        for u in g.neighbours(prev) {
            if self.assigned[u] {
                continue;
            }
            let mut score = 0.0f64;
            for k in 0..span {
                score += g.weight(u, self.order[j - 1 - k] as usize).value();
            }
            // neighbours iterate ascending, so strict improvement keeps the
            // smallest id on ties
            match best {
                Some((s, _)) if score <= s => {}
                _ => best = Some((score, u)),
            }
        }
        best.map(|(_, u)| u)
    }
}

/// Greedy chain: append the unassigned neighbour of the previous vertex with
/// the heaviest edge, falling back to the lowest unassigned vertex when the
/// chain dead-ends.
pub fn nearest_neighbor_order<G: Graph>(g: &G, start: usize) -> Vec<u32> {
    lookahead_order(g, 1, start)
}

/// Generalized greedy chain scoring candidates against the `h` previously
/// assigned vertices; `h = 1` is [`nearest_neighbor_order`].
pub fn lookahead_order<G: Graph>(g: &G, h: usize, start: usize) -> Vec<u32> {
    assert!(h >= 1, "lookahead must be at least 1");
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut st = OrderState::new(n, start);
    for _ in 1..n {
        let v = match st.best_candidate(g, h) {
            Some(u) => u,
            None => st.anyvertex(),
        };
        st.assign(v);
    }
    st.order
}

/// Builds the order and runs the frontier DP in lockstep: once rank `j - 1`
/// is placed and its argmin known, the candidate for rank `j` is the
/// unassigned neighbour with the heaviest summed attachment to the current
/// last cluster, and the DP row for rank `j` is explored up to that
/// cluster's size plus one. O(n k^2) time, two-row O(n) space.
pub fn adaptive_cluster_edit<G: Graph>(g: &G, start: usize) -> HeuristicSolution {
    let n = g.vertex_count();
    if n == 0 {
        return HeuristicSolution { clustering: Clustering::default(), stats: SolveStats::default() };
    }
    let mut st = OrderState::new(n, start);
    let mut fr = DpFrontier::new(n);
    let mut opcount = 0u64;
    for j in 1..n {
        // the i = 0 entry only needs the previous row's minimum, so it is
        // fixed before the rank-j vertex is even chosen
        let window = fr.size[j - 1] as usize + 1;
        let v = match st.best_candidate(g, window) {
            Some(u) => u,
            None => st.anyvertex(),
        };
        st.assign(v);
        opcount += fr.step(g, &st.order, j, window.min(j), 0.0);
    }
    let clustering = extract_clusters(&fr.size, &st.order).expect("solver size array is well-formed");
    HeuristicSolution {
        clustering,
        stats: SolveStats { opcount, peak_opt_entries: fr.peak_entries() },
    }
}
