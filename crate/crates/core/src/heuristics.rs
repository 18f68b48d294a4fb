//! Frontier-bounded approximations of the exact consecutive-cluster DP.
//!
//! Both variants run the same recurrence but explore `opt'(j, i)` only for
//! `i` up to a bound derived from the previous prefix: if the best
//! clustering of ranks `0..j` ends in a cluster of `s` vertices, the best
//! clustering of `0..=j` rarely ends in one of more than `s + 1`. The
//! second variant additionally chases the deepest earlier-ranked positive
//! edge, which catches most of the first variant's mistakes for a few more
//! evaluations. `X` starts at zero: that shifts every row by a constant and
//! leaves the argmin (hence the clustering) unchanged, but it means these
//! solvers do not report a cost; score the result separately when needed.

use crate::clustering::{clustering_cost, Clustering};
use crate::dp::{assert_permutation, ranks_of, DpFrontier, SolveStats};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HeuristicVariant {
    /// Explore `i` up to the previous argmin plus one.
    FrontierPlusOne,
    /// Additionally explore up to the deepest earlier-ranked positive edge.
    FrontierOrPositiveEdge,
}

#[derive(Clone, Debug)]
pub struct HeuristicSolution {
    pub clustering: Clustering,
    pub stats: SolveStats,
}

pub fn heuristic_dp<G: Graph>(g: &G, order: &[u32], variant: HeuristicVariant) -> HeuristicSolution {
    let n = g.vertex_count();
    assert_permutation(order, n);
    if n == 0 {
        return HeuristicSolution { clustering: Clustering::default(), stats: SolveStats::default() };
    }
    let rank = ranks_of(order);
    let mut fr = DpFrontier::new(n);
    let mut opcount = 0u64;
    for j in 1..n {
        let mut bound = fr.size[j - 1] as usize + 1;
        if variant == HeuristicVariant::FrontierOrPositiveEdge {
            // only stored pairs can be positive, so scanning the neighbour
            // list keeps this O(k) per step
            let vj = order[j] as usize;
            let mut deepest = 0usize;
            for u in g.neighbours(vj) {
                let r = rank[u] as usize;
                if r < j && g.weight(vj, u).value() > 0.0 {
                    deepest = deepest.max(j - r);
                }
            }
            bound = bound.max(deepest);
        }
        opcount += fr.step(g, order, j, bound.min(j), 0.0);
    }
    let clustering = crate::dp::extract_clusters(&fr.size, order).expect("solver size array is well-formed");
    HeuristicSolution {
        clustering,
        stats: SolveStats { opcount, peak_opt_entries: fr.peak_entries() },
    }
}

/// Scores a heuristic clustering. This is the step that cannot be done in
/// less than quadratic time in the worst case, which is why the solvers
/// above keep it out of the solve path.
pub fn heuristic_cost_report<G: Graph>(g: &G, c: &Clustering) -> Result<f64> {
    clustering_cost(g, c)
}
