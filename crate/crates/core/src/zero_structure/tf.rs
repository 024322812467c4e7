//! Maximum triangle-free subgraphs.
//!
//! `tf(G) = |E| − h(G)` where `h(G)` is the least number of edges meeting every
//! triangle. `h` is found by branching on the three edges of an unhit triangle,
//! pruned by a packing of edge-disjoint unhit triangles.

use crate::error::{Error, Result};
use crate::matrix_core::LabeledGraph;
use serde::Serialize;

/// Largest edge count accepted by [`tf_exact`].
pub const TF_EDGE_LIMIT: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleFreeWitness {
    pub value: usize,
    /// Kept edges (0-based vertex pairs), lexicographically least among maximisers.
    pub edges: Vec<(usize, usize)>,
    pub subgraph: LabeledGraph,
}

struct HittingProblem {
    triangles: Vec<u64>,
}

impl HittingProblem {
    fn new(g: &LabeledGraph, edges: &[(usize, usize)]) -> Self {
        let index = |u: usize, v: usize| -> usize {
            let key = if u < v { (u, v) } else { (v, u) };
            edges.binary_search(&key).expect("edge present")
        };
        let triangles = g
            .triangles()
            .into_iter()
            .map(|(a, b, c)| (1u64 << index(a, b)) | (1u64 << index(a, c)) | (1u64 << index(b, c)))
            .collect();
        HittingProblem { triangles }
    }

    /// Least number of edges to delete so that every triangle is hit, where
    /// `keep` edges may not be deleted and `drop` edges must be.
    fn min_hitting(&self, keep: u64, drop: u64) -> Option<usize> {
        if self.triangles.iter().any(|t| t & !keep == 0) {
            return None;
        }
        let mut best = usize::MAX;
        self.branch(drop, keep, &mut best);
        (best != usize::MAX).then_some(best)
    }

    fn packing_bound(&self, removed: u64, keep: u64) -> usize {
        let mut used = 0u64;
        let mut count = 0;
        for &t in &self.triangles {
            if t & removed == 0 && t & !keep & used == 0 {
                used |= t & !keep;
                count += 1;
            }
        }
        count
    }

    fn branch(&self, removed: u64, keep: u64, best: &mut usize) {
        let size = removed.count_ones() as usize;
        if size + self.packing_bound(removed, keep) >= *best {
            return;
        }
        let Some(&t) = self.triangles.iter().find(|&&t| t & removed == 0) else {
            *best = size;
            return;
        };
        let mut choices = t & !keep;
        let mut forbidden = keep;
        while choices != 0 {
            let e = choices & choices.wrapping_neg();
            choices &= !e;
            self.branch(removed | e, forbidden, best);
            // Later branches need not revisit deleting this edge.
            forbidden |= e;
        }
    }
}

/// Size of a largest triangle-free spanning subgraph, with a canonical witness.
pub fn tf_exact(g: &LabeledGraph) -> Result<TriangleFreeWitness> {
    let edges = g.edges();
    let m = edges.len();
    if m > TF_EDGE_LIMIT {
        return Err(Error::TooLarge { edges: m, limit: TF_EDGE_LIMIT });
    }
    let problem = HittingProblem::new(g, &edges);
    let h = problem.min_hitting(0, 0).expect("deleting every edge always works");
    let value = m - h;

    // Greedy in edge order with a feasibility oracle yields the least witness.
    let (mut keep, mut drop) = (0u64, 0u64);
    for e in 0..m {
        let bit = 1u64 << e;
        if problem.min_hitting(keep | bit, drop) == Some(h) {
            keep |= bit;
        } else {
            drop |= bit;
        }
    }
    let kept: Vec<(usize, usize)> = (0..m).filter(|e| keep >> e & 1 == 1).map(|e| edges[e]).collect();
    let subgraph = g.spanning_subgraph(&kept);
    debug_assert!(subgraph.is_triangle_free());
    debug_assert_eq!(kept.len(), value);
    Ok(TriangleFreeWitness { value, edges: kept, subgraph })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force(g: &LabeledGraph) -> usize {
        let edges = g.edges();
        let m = edges.len();
        (0u64..1 << m)
            .filter(|mask| {
                let kept: Vec<_> = (0..m).filter(|e| mask >> e & 1 == 1).map(|e| edges[e]).collect();
                g.spanning_subgraph(&kept).is_triangle_free()
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn mantel_on_complete_graphs() {
        for n in 3..=7 {
            let w = tf_exact(&LabeledGraph::complete(n)).unwrap();
            assert_eq!(w.value, n * n / 4);
            let (a, b) = w.subgraph.complete_bipartition().expect("complete bipartite");
            assert!(a.len().abs_diff(b.len()) <= 1);
        }
    }

    #[test]
    fn triangle() {
        let w = tf_exact(&LabeledGraph::complete(3)).unwrap();
        assert_eq!(w.value, 2);
        assert_eq!(w.edges, vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn wheels_match_formula() {
        for n in 4..=9 {
            let expected = if n % 2 == 1 { (3 * n - 3) / 2 } else { (3 * n - 4) / 2 };
            assert_eq!(tf_exact(&LabeledGraph::wheel(n)).unwrap().value, expected);
        }
    }

    #[test]
    fn agrees_with_brute_force() {
        let graphs = [
            LabeledGraph::wheel(6),
            LabeledGraph::complete(5),
            LabeledGraph::cycle(7),
            LabeledGraph::with_edges(
                (1..=6).map(|i| i.to_string()).collect(),
                &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (0, 5), (1, 4)],
            ),
        ];
        for g in &graphs {
            assert_eq!(tf_exact(g).unwrap().value, brute_force(g), "{:?}", g.edges());
        }
    }

    #[test]
    fn too_large() {
        assert_eq!(tf_exact(&LabeledGraph::complete(8)).unwrap().value, 16);
        assert!(matches!(tf_exact(&LabeledGraph::complete(9)), Err(Error::TooLarge { edges: 36, .. })));
    }
}
