//! Strategies that first discard zero-support candidates using
//! irreducibility of 5×5 principal blocks.

use super::certificate::{BoundCertificate, Configuration, Witness};
use super::horn_case::prune_horn;
use super::strategies::inapplicable;
use super::table::{Strategy, Table1Entry};
use crate::cp_decomp::cpr_bound_derivation;
use crate::error::Result;
use crate::matrix_core::{IndexSet, LabeledGraph};
use crate::zero_structure::{
    apply_inference_rules, apply_inference_rules_with, graph_gv_over, irreducibility_nogoods, irreducibility_prune,
    Fact, Nogood, SupportFamily,
};

/// Largest number of uncertain unions whose subsets are enumerated.
const MAX_UNCERTAIN: usize = 16;

/// Runs the pruning strategy stored with the entry.
pub fn strategy_prune(entry: &Table1Entry) -> Result<BoundCertificate> {
    match entry.strategy {
        Strategy::PruneHorn => prune_horn(entry),
        Strategy::PruneForest => prune_forest(entry),
        Strategy::PruneCube => prune_cube(entry),
        other => Err(inapplicable(entry, other, "not a pruning case")),
    }
}

pub(crate) fn five_subsets(n: usize) -> Vec<IndexSet> {
    IndexSet::full(n).subsets_of_size(5)
}

/// Exclusions from every 5-set whose pairs are covered by members inside it.
pub(crate) fn forest_exclusions(family: &SupportFamily) -> Vec<Fact> {
    let mut out: Vec<Fact> = Vec::new();
    for five in five_subsets(family.n) {
        for f in irreducibility_prune(family, &five) {
            if !out.iter().any(|g| g.set == f.set) {
                out.push(f);
            }
        }
    }
    out
}

pub(crate) fn prune_forest(entry: &Table1Entry) -> Result<BoundCertificate> {
    let family = &entry.family;
    let exclusions = forest_exclusions(family);
    if exclusions.is_empty() {
        return Err(inapplicable(entry, Strategy::PruneForest, "no 5-subset has all pairs covered"));
    }
    let knowledge = apply_inference_rules_with(family, &exclusions)?;
    let graph = graph_gv_over(family, &knowledge);
    if !graph.is_forest() {
        return Err(inapplicable(entry, Strategy::PruneForest, "pruned graph still has a cycle"));
    }
    let derivation = cpr_bound_derivation(&graph);
    Ok(BoundCertificate {
        case_id: entry.id,
        strategy: Strategy::PruneForest,
        bound: derivation.bound,
        uses_open_order: derivation.flagged,
        witness: Witness::Forest { exclusions, graph, derivation },
    })
}

/// The sets named by some nogood, sorted.
pub(crate) fn uncertain_sets(nogoods: &[Nogood]) -> Vec<IndexSet> {
    let mut u: Vec<IndexSet> = nogoods.iter().flat_map(|g| g.sets.iter().copied()).collect();
    u.sort_by_key(|s| s.labels());
    u.dedup();
    u
}

pub(crate) fn admissible(kept: &[IndexSet], nogoods: &[Nogood]) -> bool {
    !nogoods.iter().any(|g| g.sets.iter().all(|s| kept.contains(s)))
}

/// `graph` without the edges whose union is uncertain and not kept.
pub(crate) fn configuration_graph(
    family: &SupportFamily,
    graph: &LabeledGraph,
    uncertain: &[IndexSet],
    kept: &[IndexSet],
) -> LabeledGraph {
    let mut g = graph.clone();
    for (a, b) in graph.edges() {
        let u = family.supports[a].union(&family.supports[b]);
        if uncertain.contains(&u) && !kept.contains(&u) {
            g.remove_edge(a, b);
        }
    }
    g
}

/// Inclusion-maximal subsets of `uncertain` containing no nogood.
pub(crate) fn maximal_configurations(uncertain: &[IndexSet], nogoods: &[Nogood]) -> Vec<Vec<IndexSet>> {
    let pick = |mask: u32| -> Vec<IndexSet> {
        (0..uncertain.len()).filter(|i| mask >> i & 1 == 1).map(|i| uncertain[i]).collect()
    };
    let ok: Vec<bool> = (0u32..1 << uncertain.len()).map(|m| admissible(&pick(m), nogoods)).collect();
    (0u32..1 << uncertain.len())
        .filter(|&m| ok[m as usize] && (0..uncertain.len()).all(|i| m >> i & 1 == 1 || !ok[(m | 1 << i) as usize]))
        .map(pick)
        .collect()
}

pub(crate) fn prune_cube(entry: &Table1Entry) -> Result<BoundCertificate> {
    let s = Strategy::PruneCube;
    let family = &entry.family;
    let knowledge = apply_inference_rules(family)?;
    let nogoods: Vec<Nogood> =
        five_subsets(family.n).iter().flat_map(|f| irreducibility_nogoods(family, &knowledge, f)).collect();
    if nogoods.is_empty() {
        return Err(inapplicable(entry, s, "no irreducibility nogoods"));
    }
    let uncertain = uncertain_sets(&nogoods);
    if uncertain.len() > MAX_UNCERTAIN {
        return Err(inapplicable(entry, s, format!("{} uncertain unions", uncertain.len())));
    }
    let graph = graph_gv_over(family, &knowledge);
    let configurations: Vec<Configuration> = maximal_configurations(&uncertain, &nogoods)
        .into_iter()
        .map(|kept| {
            let g = configuration_graph(family, &graph, &uncertain, &kept);
            Configuration { edges: g.edge_count(), derivation: cpr_bound_derivation(&g), kept }
        })
        .collect();
    let bound = configurations.iter().map(|c| c.derivation.bound).max().unwrap_or(0);
    Ok(BoundCertificate {
        case_id: entry.id,
        strategy: s,
        bound,
        uses_open_order: configurations.iter().any(|c| c.derivation.flagged),
        witness: Witness::Cube { nogoods, graph, configurations },
    })
}
