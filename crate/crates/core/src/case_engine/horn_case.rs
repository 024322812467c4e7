//! The family whose members are all pairs and contain two Horn patterns.
//!
//! Two 5-subsets carry the `-1` pattern of the Horn matrix, which fixes every
//! entry of the matrix to `±1`. A `K_{2,2}` block is then a zero support
//! whose zeros never need both members of one of its perfect matchings, so
//! that edge can be dropped. What remains around the pivot is small enough
//! for the low-degree rule and an outerplanar remainder.

use super::certificate::{BoundCertificate, HornBlock, HornWitness, Witness};
use super::strategies::{inapplicable, member_index, possible_zero_supports};
use super::table::{Strategy, Table1Entry};
use crate::error::Result;
use crate::matrix_core::{rational::int, IndexSet, LabeledGraph, SymMatrix};
use crate::zero_structure::{apply_inference_rules, graph_gv_over, pair_graph, tf_exact, SupportFamily, ZeroSupportKnowledge};

/// Graph on `1..=n` whose edges are the size-2 members.
pub(crate) fn minus_one_graph(family: &SupportFamily) -> LabeledGraph {
    pair_graph(family, &IndexSet::full(family.n))
}

/// Cycle order of `g` when it is a single cycle through all its vertices.
pub(crate) fn cycle_order(g: &LabeledGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n || !g.is_connected() || g.degrees().iter().any(|&d| d != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while order.len() < n {
        let next = g.neighbors(cur).into_iter().find(|&u| u != prev).expect("degree 2");
        order.push(next);
        prev = cur;
        cur = next;
    }
    Some(order)
}

pub(crate) fn horn_blocks(family: &SupportFamily) -> Vec<HornBlock> {
    let neg = minus_one_graph(family);
    let full = IndexSet::full(family.n);
    full.subsets_of_size(5)
        .into_iter()
        .filter_map(|five| {
            let sub = neg.induced(five.bits());
            cycle_order(&sub).map(|order| {
                let labels = five.labels();
                HornBlock { five_subset: five, cycle: order.into_iter().map(|i| labels[i]).collect() }
            })
        })
        .collect()
}

/// Whether the `+1` at `(i, j)` is forced: both inside a Horn block, or with a common `-1` neighbour.
pub(crate) fn plus_one_forced(neg: &LabeledGraph, blocks: &[HornBlock], i: usize, j: usize) -> bool {
    blocks.iter().any(|b| b.five_subset.contains(i) && b.five_subset.contains(j))
        || neg.neighbors_mask(i) & neg.neighbors_mask(j) != 0
}

/// The `±1` matrix determined by the blocks, if every entry is determined.
pub(crate) fn forced_pattern(family: &SupportFamily, blocks: &[HornBlock]) -> Option<SymMatrix> {
    let n = family.n;
    let neg = minus_one_graph(family);
    let mut m = SymMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            if neg.has_edge(i, j) {
                m.set(i, j, int(-1));
            } else if plus_one_forced(&neg, blocks, i, j) {
                m.set(i, j, int(1));
            } else {
                return None;
            }
        }
    }
    Some(m)
}

/// Confirmed 4-sets holding exactly four pair members in a `K_{2,2}` pattern.
pub(crate) fn k22_blocks(family: &SupportFamily, knowledge: &ZeroSupportKnowledge) -> Vec<IndexSet> {
    IndexSet::full(family.n)
        .subsets_of_size(4)
        .into_iter()
        .filter(|s| {
            let inside = family.members_within(s);
            knowledge.is_confirmed(s)
                && inside.len() == 4
                && inside.iter().all(|&i| family.supports[i].len() == 2)
                && pair_graph(family, s).complete_bipartition().is_some_and(|(a, b)| a.len() == 2 && b.len() == 2)
        })
        .collect()
}

/// The matching in the block that avoids its smallest member.
pub(crate) fn dropped_matching(family: &SupportFamily, block: &IndexSet) -> (IndexSet, IndexSet) {
    let mut inside: Vec<IndexSet> = family.members_within(block).into_iter().map(|i| family.supports[i]).collect();
    inside.sort_by_key(|s| s.labels());
    let first = inside[0];
    let others: Vec<IndexSet> = inside[1..].iter().filter(|s| s.intersects(&first)).copied().collect();
    (others[0], others[1])
}

pub(crate) fn prune_horn(entry: &Table1Entry) -> Result<BoundCertificate> {
    let s = Strategy::PruneHorn;
    let family = &entry.family;
    let pivot = entry.pivot.ok_or_else(|| inapplicable(entry, s, "no pivot stored with the case"))?;
    let v = member_index(entry, s, &pivot)?;
    if family.supports.iter().any(|m| m.len() != 2) {
        return Err(inapplicable(entry, s, "not every minimal support is a pair"));
    }
    let horn_blocks = horn_blocks(family);
    if horn_blocks.is_empty() {
        return Err(inapplicable(entry, s, "no 5-subset carries the Horn pattern"));
    }
    let pattern =
        forced_pattern(family, &horn_blocks).ok_or_else(|| inapplicable(entry, s, "some entry is not forced to ±1"))?;
    let knowledge = apply_inference_rules(family)?;
    let block = *k22_blocks(family, &knowledge)
        .first()
        .ok_or_else(|| inapplicable(entry, s, "no K_{2,2} block among the zero supports"))?;
    if let Some(sup) = possible_zero_supports(family, &knowledge).into_iter().find(|z| block.is_proper_subset(z)) {
        return Err(inapplicable(entry, s, format!("{sup} may be a zero support containing {block}")));
    }
    let dropped = dropped_matching(family, &block);
    let mut graph = graph_gv_over(family, &knowledge);
    let a = family.supports.iter().position(|m| *m == dropped.0).expect("member");
    let b = family.supports.iter().position(|m| *m == dropped.1).expect("member");
    graph.remove_edge(a, b);
    let degree = graph.degree(v);
    if !(1..=2).contains(&degree) {
        return Err(inapplicable(entry, s, format!("pivot {pivot} has degree {degree}")));
    }
    let remainder = graph.remove_vertex(v);
    if !remainder.is_connected() || !remainder.is_outerplanar() {
        return Err(inapplicable(entry, s, "remainder is not a connected outerplanar graph"));
    }
    let remainder_tf = tf_exact(&remainder)?;
    if remainder_tf.value < remainder.vertex_count() {
        return Err(inapplicable(entry, s, "remainder has fewer triangle-free edges than vertices"));
    }
    Ok(BoundCertificate {
        case_id: entry.id,
        strategy: s,
        bound: degree + remainder_tf.value,
        uses_open_order: false,
        witness: Witness::Horn(Box::new(HornWitness {
            horn_blocks,
            pattern,
            block,
            dropped,
            graph,
            pivot,
            degree,
            remainder,
            remainder_tf,
        })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::case_engine::load_table1;

    fn entry36() -> Table1Entry {
        load_table1().unwrap().into_iter().find(|e| e.id == 36).unwrap()
    }

    #[test]
    fn blocks_are_the_two_deletions() {
        let e = entry36();
        let five: Vec<Vec<usize>> = horn_blocks(&e.family).iter().map(|b| b.five_subset.labels()).collect();
        assert!(five.contains(&vec![1, 2, 3, 5, 6]));
        assert!(five.contains(&vec![1, 3, 4, 5, 6]));
        let m = forced_pattern(&e.family, &horn_blocks(&e.family)).unwrap();
        assert_eq!(*m.get(1, 3), int(1));
    }

    #[test]
    fn certificate() {
        let c = prune_horn(&entry36()).unwrap();
        assert_eq!(c.bound, 9);
        let Witness::Horn(w) = &c.witness else { panic!() };
        assert_eq!(w.block.labels(), vec![1, 2, 4, 5]);
        assert_eq!((w.dropped.0.labels(), w.dropped.1.labels()), (vec![1, 4], vec![2, 5]));
        assert_eq!(w.degree, 2);
        assert_eq!(w.remainder_tf.value, 7);
        assert_eq!((w.graph.vertex_count(), w.graph.edge_count()), (7, 11));
    }

    #[test]
    fn cycle_order_rejects_non_cycles() {
        assert_eq!(cycle_order(&LabeledGraph::cycle(5)).unwrap().len(), 5);
        assert!(cycle_order(&LabeledGraph::path(5)).is_none());
        assert!(cycle_order(&LabeledGraph::complete(4)).is_none());
    }
}
