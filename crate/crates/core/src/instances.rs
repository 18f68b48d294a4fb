//! Hand-constructed graphs used by tests, the acceptance suite and docs.

use crate::graph::{DistanceWeight, PointGraph, WeightedGraph};

/// Complete signed graph: listed pairs weigh +1, every other pair -1.
pub fn signed_complete_graph(n: usize, edges: &[(u32, u32)]) -> WeightedGraph {
    let mut all = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            let present = edges.iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b));
            all.push((a, b, if present { 1.0 } else { -1.0 }));
        }
    }
    WeightedGraph::from_edges(n, &all).unwrap()
}

/// Seven vertices, two natural groups joined by one stray edge; the optimal
/// editing inserts one edge inside the quad and cuts the bridge, cost 2.
pub fn example_two_cluster_graph() -> WeightedGraph {
    signed_complete_graph(
        7,
        &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)],
    )
}

/// Two populations of five reads whose genome positions interleave but whose
/// insert sizes split them cleanly: vertices 0..=4 form one band, 5..=9 the
/// other. Within a band, weights fall off with label distance; across bands
/// they are negative, with a mild gradient from the second band's tail
/// towards vertex 4 so that greedy chaining crosses over there.
///
/// Returns the graph, the coordinate (left-to-right) order and the leftmost
/// vertex.
pub fn interleaved_two_population() -> (WeightedGraph, Vec<u32>, usize) {
    interleaved_two_population_sized(5)
}

/// The same family with `per_band` reads in each population.
pub fn interleaved_two_population_sized(per_band: usize) -> (WeightedGraph, Vec<u32>, usize) {
    assert!(per_band >= 2);
    let m = per_band as u32;
    let in_band = |a: u32, b: u32| -> f64 {
        match b - a {
            1 => 10.0,
            2 => 5.0,
            _ => 2.0,
        }
    };
    let mut edges = Vec::new();
    for a in 0..2 * m {
        for b in a + 1..2 * m {
            let same = (a < m) == (b < m);
            let w = if same {
                in_band(a, b)
            } else if b == 2 * m - 1 {
                // gradient towards the end of the first band: the last
                // second-band vertex crosses over least badly at m-1
                -(1.0 + (m - 1 - a) as f64)
            } else {
                -6.0
            };
            edges.push((a, b, w));
        }
    }
    let g = WeightedGraph::from_edges(2 * m as usize, &edges).unwrap();
    // positions alternate: m 0 m+1 1 m+2 2 ...
    let mut coordinate_order = Vec::with_capacity(2 * per_band);
    for k in 0..m {
        coordinate_order.push(m + k);
        coordinate_order.push(k);
    }
    (g, coordinate_order, per_band)
}

/// A chain 0-1-2-3 continuing through 5-6-7-8, with vertex 4 attached to
/// the middle of the first stretch: single-step greed at vertex 3 prefers 5
/// and never comes back for 4, while a three-vertex lookahead picks 4 up
/// immediately. Returns the graph, the start vertex and the offshoot.
pub fn chain_with_offshoot() -> (WeightedGraph, usize, u32) {
    let edges = vec![
        (0u32, 1u32, 10.0),
        (1, 2, 10.0),
        (2, 3, 10.0),
        (0, 2, 5.0),
        (1, 3, 5.0),
        (0, 3, 2.0),
        (3, 5, 5.0),
        (3, 4, 4.0),
        (2, 4, 4.0),
        (1, 4, 4.0),
        (1, 5, 1.0),
        (2, 5, 1.0),
        (4, 5, 2.0),
        (5, 6, 10.0),
        (6, 7, 10.0),
        (7, 8, 10.0),
    ];
    (WeightedGraph::from_edges(9, &edges).unwrap(), 0, 4)
}

/// `groups` clumps of `per` points each, clump width `l / 2`, consecutive
/// clumps `gap` apart: the optimal clustering is one cluster per clump.
pub fn clumped_point_graph(groups: usize, per: usize, l: f64, gap: f64, seed: u64) -> PointGraph {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut positions = Vec::with_capacity(groups * per);
    for gi in 0..groups {
        let base = gi as f64 * gap;
        for _ in 0..per {
            positions.push(base + rng.random::<f64>() * l * 0.5);
        }
    }
    positions.sort_unstable_by(f64::total_cmp);
    PointGraph::new(positions, DistanceWeight::Rational { l })
}
