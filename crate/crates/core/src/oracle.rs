//! Exhaustive minimum cluster editing for small graphs.
//!
//! Every partition of the vertex set is enumerated as a restricted-growth
//! string and scored; this is the ground truth the solvers are tested
//! against. Bell(12) is above four million, hence the hard size limit.

use crate::clustering::{clustering_cost, Clustering};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Enumerates all partitions in lexicographic restricted-growth order and
/// returns a minimum-cost one (the lexicographically first on ties).
pub fn brute_force_cluster_edit<G: Graph>(g: &G) -> Result<(Clustering, f64)> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooManyVertices { n, limit: BRUTE_FORCE_LIMIT });
    }
    if n == 0 {
        return Ok((Clustering::default(), 0.0));
    }
    let mut rgs = vec![0u32; n];
    let mut best_rgs = rgs.clone();
    let mut best_cost = f64::INFINITY;
    loop {
        let c = clustering_from_rgs(&rgs);
        let cost = clustering_cost(g, &c).expect("growth strings encode partitions");
        if cost < best_cost {
            best_cost = cost;
            best_rgs.copy_from_slice(&rgs);
        }
        if !next_rgs(&mut rgs) {
            break;
        }
    }
    Ok((clustering_from_rgs(&best_rgs), best_cost))
}

/// Blocks of a restricted-growth string, in order of first appearance.
fn clustering_from_rgs(rgs: &[u32]) -> Clustering {
    let blocks = rgs.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut clusters: Vec<Vec<u32>> = vec![Vec::new(); blocks];
    for (v, &b) in rgs.iter().enumerate() {
        clusters[b as usize].push(v as u32);
    }
    Clustering::new(clusters)
}

/// Advances to the next restricted-growth string; false once exhausted.
fn next_rgs(rgs: &mut [u32]) -> bool {
    let n = rgs.len();
    for i in (1..n).rev() {
        let prefix_max = rgs[..i].iter().copied().max().unwrap();
        if rgs[i] <= prefix_max {
            rgs[i] += 1;
            rgs[i + 1..].fill(0);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;
    use crate::instances::{example_two_cluster_graph, signed_complete_graph};

    #[test]
    fn partition_counts_are_bell_numbers() {
        for (n, bell) in [(1usize, 1u64), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)] {
            let mut rgs = vec![0u32; n];
            let mut count = 1u64;
            while next_rgs(&mut rgs) {
                count += 1;
            }
            assert_eq!(count, bell);
        }
    }

    #[test]
    fn example_graph_optimum() {
        let g = example_two_cluster_graph();
        let (c, cost) = brute_force_cluster_edit(&g).unwrap();
        assert_eq!(cost, 2.0);
        let expect = Clustering::new(vec![vec![0, 1, 2, 3], vec![4, 5, 6]]);
        assert!(c.same_partition(&expect));
    }

    #[test]
    fn degenerate_graphs() {
        // edgeless: all singletons for free
        let g = WeightedGraph::from_edges(4, &[]).unwrap();
        let (c, cost) = brute_force_cluster_edit(&g).unwrap();
        assert_eq!(cost, f64::min(cost, crate::weight::W_MAX));
        assert_eq!(cost, 0.0);
        assert!(c.same_partition(&Clustering::singletons(4)));

        // complete positive: one cluster for free
        let g = signed_complete_graph(5, &(0..5u32).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect::<Vec<_>>());
        let (c, cost) = brute_force_cluster_edit(&g).unwrap();
        assert_eq!(cost, 0.0);
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn size_limit() {
        let g = WeightedGraph::from_edges(13, &[]).unwrap();
        assert!(matches!(
            brute_force_cluster_edit(&g),
            Err(Error::TooManyVertices { n: 13, limit: 12 })
        ));
    }
}
