//! Exclusions from irreducibility of a principal 5×5 block.
//!
//! If every pair inside a 5-set `S` lies in a zero support, the block `M[S]`
//! is irreducible with respect to every off-diagonal `E_ij`. A size-4 zero
//! support inside `S` would then make `M[S]`, and with it `M`, positive
//! semidefinite, which is impossible for an exceptional matrix.

use super::family::SupportFamily;
use super::knowledge::{Fact, Rule, Status, ZeroSupportKnowledge};
use crate::matrix_core::IndexSet;
use serde::Serialize;

/// Size-4 subsets of `five_subset` excluded when the members alone cover every pair.
pub fn irreducibility_prune(family: &SupportFamily, five_subset: &IndexSet) -> Vec<Fact> {
    assert_eq!(five_subset.len(), 5, "irreducibility pruning needs a 5-set");
    if !family.covers_pairs(five_subset, &[]) {
        return Vec::new();
    }
    five_subset
        .subsets_of_size(4)
        .into_iter()
        .map(|set| Fact {
            set,
            status: Status::Excluded,
            rule: Rule::IrreducibleFiveSubset,
            premises: vec![*five_subset],
        })
        .collect()
}

/// Sets of size-4 candidates inside a 5-set that cannot all be zero supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Nogood {
    pub five_subset: IndexSet,
    pub sets: Vec<IndexSet>,
}

/// Inclusion-minimal groups of undecided size-4 candidates inside `five_subset`
/// which, together with the members, would cover every pair of it.
///
/// Groups of size one are plain exclusions; larger groups say that at most
/// some of the candidates can be zero supports simultaneously.
pub fn irreducibility_nogoods(
    family: &SupportFamily,
    knowledge: &ZeroSupportKnowledge,
    five_subset: &IndexSet,
) -> Vec<Nogood> {
    assert_eq!(five_subset.len(), 5, "irreducibility pruning needs a 5-set");
    let candidates: Vec<IndexSet> = five_subset
        .subsets_of_size(4)
        .into_iter()
        .filter(|s| !knowledge.is_excluded(s) && family.is_union_of_members(s))
        .collect();
    let mut out: Vec<Nogood> = Vec::new();
    for mask in 1u32..(1 << candidates.len()) {
        let group: Vec<IndexSet> = (0..candidates.len()).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]).collect();
        if !family.covers_pairs(five_subset, &group) {
            continue;
        }
        if out.iter().any(|g| g.sets.iter().all(|s| group.contains(s))) {
            continue;
        }
        out.push(Nogood { five_subset: *five_subset, sets: group });
    }
    out.sort_by(|a, b| a.sets.len().cmp(&b.sets.len()).then_with(|| a.sets.cmp(&b.sets)));
    // Supersets found before their subsets (different popcount order) are dropped here.
    let mut minimal: Vec<Nogood> = Vec::new();
    for g in out {
        if !minimal.iter().any(|m| m.sets.iter().all(|s| g.sets.contains(s))) {
            minimal.push(g);
        }
    }
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zero_structure::apply_inference_rules;

    fn f43() -> SupportFamily {
        SupportFamily::from_labels(
            6,
            &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[1, 3, 6], &[1, 4, 6], &[2, 5, 6], &[3, 5, 6], &[4, 5, 6]],
        )
        .unwrap()
    }

    fn f44() -> SupportFamily {
        SupportFamily::from_labels(
            6,
            &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 5], &[1, 4, 5], &[2, 3, 6], &[2, 4, 6], &[3, 5, 6], &[4, 5, 6]],
        )
        .unwrap()
    }

    #[test]
    fn covered_five_subset_excludes_all_quadruples() {
        let ex = irreducibility_prune(&f43(), &IndexSet::from_labels(6, &[1, 2, 3, 5, 6]));
        assert_eq!(ex.len(), 5);
        assert!(ex.iter().all(|f| f.status == Status::Excluded));
    }

    #[test]
    fn uncovered_pair_gives_nothing() {
        assert!(irreducibility_prune(&f44(), &IndexSet::from_labels(6, &[1, 2, 3, 4, 5])).is_empty());
        let f = SupportFamily::from_labels(6, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5]]).unwrap();
        assert!(irreducibility_prune(&f, &IndexSet::from_labels(6, &[1, 2, 3, 4, 5])).is_empty());
    }

    #[test]
    fn cube_nogoods_are_adjacent_cycle_edges() {
        let f = f44();
        let k = apply_inference_rules(&f).unwrap();
        let s = IndexSet::from_labels(6, &[1, 2, 3, 4, 5]);
        let goods = irreducibility_nogoods(&f, &k, &s);
        assert_eq!(goods.len(), 4);
        for g in &goods {
            assert_eq!(g.sets.len(), 2);
            // Two distinct size-4 subsets of a 5-set share exactly three elements.
            assert_eq!(g.sets[0].intersection(&g.sets[1]).len(), 3);
        }
    }
}
