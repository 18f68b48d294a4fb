//! Sweep enumeration of maximal cliques over sorted reads.
//!
//! A single pass over the 2n interval endpoints maintains the set of
//! "active" cliques, the ones that reads yet to open could still extend.
//! Opening a read extends the active cliques its neighbourhood fully
//! contains, forks the partially intersecting ones, or starts a fresh
//! singleton; closing a read retires and emits every active clique holding
//! it. On interval-like inputs the emitted set is exactly the maximal
//! cliques; far from interval graphs the active set can blow up, which the
//! cap turns into an error instead of a hang.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{validate_reads, Graph};
use crate::read::Read;

/// Active-set cap; inputs that exceed it are too far from interval graphs
/// for the sweep to be the right tool.
pub const DEFAULT_ACTIVE_CAP: usize = 100_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliqueSet {
    /// Maximal cliques in emission order, members ascending.
    pub cliques: Vec<Vec<u32>>,
}

/// Enumerates the maximal cliques of the edge graph (pairs with weight
/// >= 0) of a sorted read list.
pub fn enumerate_maximal_cliques<G: Graph>(reads: &[Read], g: &G, max_active: usize) -> Result<CliqueSet> {
    validate_reads(reads)?;
    let n = reads.len();
    assert_eq!(n, g.vertex_count(), "reads and graph must describe the same vertices");

    // endpoint events: left endpoints first at equal coordinates, then by id
    #[derive(Clone, Copy, PartialEq)]
    enum Kind {
        Open,
        Close,
    }
    let mut events: Vec<(f64, u8, u32)> = Vec::with_capacity(2 * n);
    for (v, r) in reads.iter().enumerate() {
        events.push((r.left, 0, v as u32));
        events.push((r.right(), 1, v as u32));
    }
    events.sort_by(|a, b| a.partial_cmp(b).expect("finite endpoints"));

    let mut active: Vec<Vec<u32>> = Vec::new();
    let mut emitted: Vec<Vec<u32>> = Vec::new();
    for (_, kind, v) in events {
        let kind = if kind == 0 { Kind::Open } else { Kind::Close };
        match kind {
            Kind::Open => {
                let hood: HashSet<u32> =
                    g.neighbours(v as usize).filter(|&u| g.weight(v as usize, u).value() >= 0.0).map(|u| u as u32).collect();
                let mut spawned: Vec<Vec<u32>> = Vec::new();
                let mut any_intersection = false;
                for clique in active.iter_mut() {
                    let inside = clique.iter().filter(|u| hood.contains(u)).count();
                    if inside == 0 {
                        continue;
                    }
                    any_intersection = true;
                    if inside == clique.len() {
                        // fully compatible: extend in place
                        let pos = clique.partition_point(|&u| u < v);
                        clique.insert(pos, v);
                    } else {
                        // fork the compatible part
                        let mut fork: Vec<u32> = clique.iter().copied().filter(|u| hood.contains(u)).collect();
                        let pos = fork.partition_point(|&u| u < v);
                        fork.insert(pos, v);
                        spawned.push(fork);
                    }
                }
                if !any_intersection {
                    spawned.push(vec![v]);
                }
                for fork in spawned {
                    if !active.contains(&fork) {
                        active.push(fork);
                    }
                }
                if active.len() > max_active {
                    return Err(Error::ActiveCliqueCap { cap: max_active });
                }
            }
            Kind::Close => {
                let mut retiring: Vec<Vec<u32>> = Vec::new();
                active.retain(|clique| {
                    if clique.binary_search(&v).is_ok() {
                        retiring.push(clique.clone());
                        false
                    } else {
                        true
                    }
                });
                // emit largest first so same-batch subsets are suppressed too
                retiring.sort_by_key(|c| std::cmp::Reverse(c.len()));
                for mut clique in retiring {
                    let dominated = emitted.iter().any(|e| is_subset(&clique, e));
                    if !dominated {
                        emitted.push(clique.clone());
                    }
                    // the remainder holds still-open reads that later reads
                    // may yet join; keep it in play
                    clique.retain(|&u| u != v);
                    if !clique.is_empty() && !active.contains(&clique) {
                        active.push(clique);
                    }
                }
            }
        }
    }
    Ok(CliqueSet { cliques: emitted })
}

/// Both slices sorted ascending.
fn is_subset(a: &[u32], b: &[u32]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_alignment_graph, WeightedGraph};
    use crate::read::AlignParams;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Overlap-interval graph: +1 for overlapping spans.
    fn interval_graph(reads: &[Read]) -> WeightedGraph {
        let mut edges = Vec::new();
        for a in 0..reads.len() {
            for b in a + 1..reads.len() {
                if crate::read::span_overlap(&reads[a], &reads[b]) > 0.0 {
                    edges.push((a as u32, b as u32, 1.0));
                }
            }
        }
        WeightedGraph::from_edges(reads.len(), &edges).unwrap()
    }

    /// Plain Bron-Kerbosch, the independent check.
    fn bron_kerbosch(g: &WeightedGraph) -> Vec<Vec<u32>> {
        fn expand(
            g: &WeightedGraph,
            r: &mut Vec<u32>,
            mut p: Vec<u32>,
            mut x: Vec<u32>,
            out: &mut Vec<Vec<u32>>,
        ) {
            if p.is_empty() && x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
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
        let p: Vec<u32> = (0..g.vertex_count() as u32).collect();
        expand(g, &mut Vec::new(), p, Vec::new(), &mut out);
        out.sort();
        out
    }

    fn sorted(mut cliques: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
        cliques.sort();
        cliques
    }

    #[test]
    fn single_and_pair() {
        let reads = vec![Read::new(0, 0.0, 100.0)];
        let g = interval_graph(&reads);
        let cs = enumerate_maximal_cliques(&reads, &g, DEFAULT_ACTIVE_CAP).unwrap();
        assert_eq!(cs.cliques, vec![vec![0]]);

        let reads = vec![Read::new(0, 0.0, 100.0), Read::new(1, 50.0, 100.0)];
        let g = interval_graph(&reads);
        let cs = enumerate_maximal_cliques(&reads, &g, DEFAULT_ACTIVE_CAP).unwrap();
        assert_eq!(cs.cliques, vec![vec![0, 1]]);
    }

    #[test]
    fn chain_of_three() {
        // A-B and B-C overlap, A-C do not: two maximal cliques
        let reads = vec![
            Read::new(0, 0.0, 60.0),
            Read::new(1, 50.0, 60.0),
            Read::new(2, 105.0, 60.0),
        ];
        let g = interval_graph(&reads);
        let cs = enumerate_maximal_cliques(&reads, &g, DEFAULT_ACTIVE_CAP).unwrap();
        assert_eq!(sorted(cs.cliques), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn matches_bron_kerbosch_on_random_interval_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for round in 0..200 {
            let n = rng.random_range(1..=15);
            let mut reads: Vec<Read> = (0..n)
                .map(|i| Read::new(i as u64, rng.random_range(0.0..200.0), rng.random_range(5.0..80.0)))
                .collect();
            reads.sort_by(|a, b| (a.left, a.id).partial_cmp(&(b.left, b.id)).unwrap());
            let g = interval_graph(&reads);
            let cs = enumerate_maximal_cliques(&reads, &g, DEFAULT_ACTIVE_CAP).unwrap();
            assert_eq!(sorted(cs.cliques.clone()), bron_kerbosch(&g), "round {round}");
            // every emitted clique is maximal: nobody outside is adjacent to all
            for clique in &cs.cliques {
                for v in 0..n as u32 {
                    if clique.contains(&v) {
                        continue;
                    }
                    let all = clique.iter().all(|&u| g.weight(v as usize, u as usize).value() >= 0.0);
                    assert!(!all, "clique {clique:?} extendable by {v}");
                }
            }
        }
    }

    #[test]
    fn alignment_graph_cliques_cover_connected_reads() {
        let p = AlignParams::default();
        let reads: Vec<Read> = (0..30)
            .map(|i| Read::new(i as u64, 8.0 * i as f64, 112.0 + (i % 3) as f64))
            .collect();
        let g = build_alignment_graph(&reads, &p).unwrap();
        let cs = enumerate_maximal_cliques(&reads, &g, DEFAULT_ACTIVE_CAP).unwrap();
        let covered: HashSet<u32> = cs.cliques.iter().flatten().copied().collect();
        for v in 0..30usize {
            let isolated = !g.neighbours(v).any(|u| g.weight(v, u).value() >= 0.0);
            assert!(isolated || covered.contains(&(v as u32)));
        }
    }

    #[test]
    fn rejects_unsorted_reads() {
        let reads = vec![Read::new(0, 10.0, 5.0), Read::new(1, 0.0, 5.0)];
        let g = interval_graph(&reads);
        assert!(enumerate_maximal_cliques(&reads, &g, DEFAULT_ACTIVE_CAP).is_err());
    }

    #[test]
    fn active_cap_aborts_far_from_interval_graphs() {
        // every span overlaps every other, but the edge graph is a sparse
        // random subset: partial intersections fork cliques without bound
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = 40u32;
        let reads: Vec<Read> = (0..n).map(|i| Read::new(i as u64, 0.1 * i as f64, 100.0)).collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random::<f64>() < 0.5 {
                    edges.push((a, b, 1.0));
                }
            }
        }
        let g = WeightedGraph::from_edges(n as usize, &edges).unwrap();
        assert!(matches!(
            enumerate_maximal_cliques(&reads, &g, 8),
            Err(Error::ActiveCliqueCap { cap: 8 })
        ));
    }
}
