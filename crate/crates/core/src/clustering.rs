//! Partitions of the vertex set and their editing cost.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::weight::sat_add;

/// A partition of the vertices into disjoint, non-empty clusters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Clustering {
    pub clusters: Vec<Vec<u32>>,
}

impl Clustering {
    pub fn new(clusters: Vec<Vec<u32>>) -> Clustering {
        Clustering { clusters }
    }

    pub fn singletons(n: usize) -> Clustering {
        Clustering { clusters: (0..n as u32).map(|v| vec![v]).collect() }
    }

    pub fn len(&self) -> usize {
        self.clusters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clusters.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.clusters.iter().map(Vec::len).sum()
    }

    /// Cluster index per vertex; errors unless the clusters form a partition
    /// of `0..n`.
    pub fn membership(&self, n: usize) -> Result<Vec<u32>> {
        let bad = |reason: String| Error::NotAPartition { n, reason };
        if self.vertex_count() != n {
            return Err(bad(format!("{} vertex slots for {} vertices", self.vertex_count(), n)));
        }
        let mut member = vec![u32::MAX; n];
        for (c, cluster) in self.clusters.iter().enumerate() {
            if cluster.is_empty() {
                return Err(bad(format!("cluster {c} is empty")));
            }
            for &v in cluster {
                let slot = member.get_mut(v as usize).ok_or_else(|| Error::NotAPartition {
                    n,
                    reason: format!("vertex {v} out of range"),
                })?;
                if *slot != u32::MAX {
                    return Err(bad(format!("vertex {v} appears twice")));
                }
                *slot = c as u32;
            }
        }
        Ok(member)
    }

    /// Clusters ordered by their smallest vertex, members ascending; the
    /// layout used for dumps.
    pub fn normalized(&self) -> Clustering {
        let mut clusters: Vec<Vec<u32>> = self
            .clusters
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.sort_unstable();
                c
            })
            .collect();
        clusters.sort_by_key(|c| c[0]);
        Clustering { clusters }
    }

    /// Set-of-sets equality, ignoring cluster and member order.
    pub fn same_partition(&self, other: &Clustering) -> bool {
        self.normalized() == other.normalized()
    }
}

/// Editing cost of a clustering: the negative parts of within-cluster pairs
/// (edges that must be inserted) plus the positive parts of cross-cluster
/// pairs (edges that must be cut). A minus-infinity pair inside a cluster
/// contributes the saturation cap.
///
/// The cut term only walks neighbour lists; pairs outside them have no
/// positive part. Cost is O(n k + sum of squared cluster sizes).
pub fn clustering_cost<G: Graph>(g: &G, c: &Clustering) -> Result<f64> {
    let n = g.vertex_count();
    let member = c.membership(n)?;
    let cap = g.wmax();
    let mut cost = 0.0f64;
    for cluster in &c.clusters {
        for i in 0..cluster.len() {
            for j in i + 1..cluster.len() {
                cost = sat_add(cost, g.weight(cluster[i] as usize, cluster[j] as usize).neg_part(), cap);
            }
        }
    }
    for v in 0..n {
        for u in g.neighbours(v) {
            if u > v && member[u] != member[v] {
                cost = sat_add(cost, g.weight(v, u).pos_part(), cap);
            }
        }
    }
    Ok(cost)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, WeightedGraph};
    use crate::instances::{example_two_cluster_graph, signed_complete_graph};
    use crate::weight::W_MAX;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Independent route: score a membership vector with one double loop
    /// over all pairs.
    pub(crate) fn double_loop_cost<G: Graph>(g: &G, member: &[u32]) -> f64 {
        let n = g.vertex_count();
        let mut cost = 0.0;
        for v in 0..n {
            for u in v + 1..n {
                let w = g.weight(v, u);
                let term = if member[v] == member[u] { w.neg_part() } else { w.pos_part() };
                cost = sat_add(cost, term, g.wmax());
            }
        }
        cost
    }

    #[test]
    fn two_cluster_example_costs_two() {
        let g = example_two_cluster_graph();
        let c = Clustering::new(vec![vec![0, 1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(clustering_cost(&g, &c).unwrap(), 2.0);
    }

    #[test]
    fn edgeless_singletons_cost_zero() {
        let g = WeightedGraph::from_edges(5, &[]).unwrap();
        let c = Clustering::singletons(5);
        assert_eq!(clustering_cost(&g, &c).unwrap(), 0.0);
        // but any merge pays the saturated insertion cost of an absent pair
        let c = Clustering::new(vec![vec![0, 1], vec![2], vec![3], vec![4]]);
        assert_eq!(clustering_cost(&g, &c).unwrap(), W_MAX);
    }

    #[test]
    fn random_partitions_match_double_loop() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = 8;
            let mut edges = Vec::new();
            for a in 0..n as u32 {
                for b in a + 1..n as u32 {
                    if rng.random::<f64>() < 0.7 {
                        edges.push((a, b, rng.random_range(-5.0..5.0)));
                    }
                }
            }
            let g = WeightedGraph::from_edges(n, &edges).unwrap();
            let member: Vec<u32> = (0..n).map(|_| rng.random_range(0..4u32)).collect();
            let mut clusters: Vec<Vec<u32>> = vec![Vec::new(); 4];
            for (v, &m) in member.iter().enumerate() {
                clusters[m as usize].push(v as u32);
            }
            clusters.retain(|c| !c.is_empty());
            let relabeled = Clustering::new(clusters);
            let member = relabeled.membership(n).unwrap();
            let expect = double_loop_cost(&g, &member);
            let got = clustering_cost(&g, &relabeled).unwrap();
            assert!((got - expect).abs() <= 1e-9 * expect.abs().max(1.0));
        }
    }

    #[test]
    fn rejects_non_partitions() {
        let g = signed_complete_graph(3, &[(0, 1)]);
        for c in [
            Clustering::new(vec![vec![0, 1]]),
            Clustering::new(vec![vec![0, 1, 2], vec![2]]),
            Clustering::new(vec![vec![0, 1, 5]]),
            Clustering::new(vec![vec![0, 1, 2], vec![]]),
        ] {
            assert!(matches!(clustering_cost(&g, &c), Err(Error::NotAPartition { .. })));
        }
    }
}
