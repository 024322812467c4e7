//! The strategies that need nothing beyond the inference rules.

use super::certificate::{BoundCertificate, Witness};
use super::table::{Strategy, Table1Entry};
use crate::cp_decomp::{cpr_bound_derivation, max_cpr_order};
use crate::error::{Error, Result};
use crate::matrix_core::IndexSet;
use crate::zero_structure::{apply_inference_rules, graph_gm, graph_gv_over, tf_exact, SupportFamily, ZeroSupportKnowledge};

pub(crate) fn inapplicable(entry: &Table1Entry, strategy: Strategy, reason: impl Into<String>) -> Error {
    Error::StrategyInapplicable { case: entry.id, strategy: strategy.to_string(), reason: reason.into() }
}

/// Sets that may still be zero supports after inference.
pub(crate) fn possible_zero_supports(family: &SupportFamily, knowledge: &ZeroSupportKnowledge) -> Vec<IndexSet> {
    IndexSet::all_nonempty(family.n)
        .filter(|s| {
            s.len() >= 2
                && s.len() <= family.max_zero_support()
                && !knowledge.is_excluded(s)
                && family.is_union_of_members(s)
        })
        .collect()
}

/// Possible zero supports holding three or more members.
pub(crate) fn crowded(family: &SupportFamily, possible: &[IndexSet]) -> Vec<IndexSet> {
    possible.iter().filter(|s| family.members_within(s).len() >= 3).copied().collect()
}

fn pair_unions(entry: &Table1Entry, strategy: Strategy, knowledge: &ZeroSupportKnowledge) -> Result<Vec<IndexSet>> {
    let possible = possible_zero_supports(&entry.family, knowledge);
    let bad = crowded(&entry.family, &possible);
    if let Some(s) = bad.first() {
        return Err(inapplicable(
            entry,
            strategy,
            format!("{s} may be a zero support containing {} members", entry.family.members_within(s).len()),
        ));
    }
    Ok(possible)
}

pub(crate) fn member_index(entry: &Table1Entry, strategy: Strategy, pivot: &IndexSet) -> Result<usize> {
    entry
        .family
        .supports
        .iter()
        .position(|s| s == pivot)
        .ok_or_else(|| inapplicable(entry, strategy, format!("pivot {pivot} is not a minimal support")))
}

/// Each zero is a combination of at most two minimal zeros, so `XXᵀ` is in
/// the orbit of a diagonally dominant `k × k` matrix: `cpr ≤ ⌊k²/4⌋`.
pub fn strategy_dd(entry: &Table1Entry) -> Result<BoundCertificate> {
    let knowledge = apply_inference_rules(&entry.family)?;
    let possible = pair_unions(entry, Strategy::Dd, &knowledge)?;
    let k = entry.family.k();
    Ok(BoundCertificate {
        case_id: entry.id,
        strategy: Strategy::Dd,
        bound: k * k / 4,
        uses_open_order: false,
        witness: Witness::PairUnions { k, possible_zero_supports: possible },
    })
}

/// Removes a pivot of degree at most 2 from the over-approximation of `G_V(M)`
/// and bounds the rest by `p_m`.
pub fn strategy_low_degree(entry: &Table1Entry, pivot: &IndexSet) -> Result<BoundCertificate> {
    let v = member_index(entry, Strategy::LowDegree, pivot)?;
    let knowledge = apply_inference_rules(&entry.family)?;
    let gm = graph_gm(&entry.family);
    let graph = graph_gv_over(&entry.family, &knowledge);
    let degree = graph.degree(v);
    if !(1..=2).contains(&degree) {
        return Err(inapplicable(entry, Strategy::LowDegree, format!("pivot {pivot} has degree {degree}")));
    }
    let exclusions = gm
        .neighbors(v)
        .into_iter()
        .filter(|&u| !graph.has_edge(v, u))
        .map(|u| {
            let union = pivot.union(&entry.family.supports[u]);
            knowledge.fact(&union).cloned().expect("removed edges are excluded")
        })
        .collect();
    let remainder = graph.remove_vertex(v);
    let (remainder_bound, open) = max_cpr_order(remainder.vertex_count());
    let refined_remainder = cpr_bound_derivation(&remainder);
    Ok(BoundCertificate {
        case_id: entry.id,
        strategy: Strategy::LowDegree,
        bound: degree + remainder_bound,
        uses_open_order: open,
        witness: Witness::LowDegree {
            pivot: *pivot,
            degree,
            exclusions,
            graph,
            remainder,
            remainder_bound,
            refined_remainder,
        },
    })
}

/// Splits a minimal factorization into the columns whose support contains the
/// pivot and the rest. The first part has distinct supports, each a zero
/// support strictly containing the pivot, unless it is a single column.
pub fn strategy_omega_split(entry: &Table1Entry, pivot: &IndexSet) -> Result<BoundCertificate> {
    let v = member_index(entry, Strategy::OmegaSplit, pivot)?;
    let knowledge = apply_inference_rules(&entry.family)?;
    let proper_supersets: Vec<IndexSet> = possible_zero_supports(&entry.family, &knowledge)
        .into_iter()
        .filter(|s| pivot.is_proper_subset(s))
        .collect();
    let t = proper_supersets.len();
    if t > 3 {
        return Err(inapplicable(entry, Strategy::OmegaSplit, format!("{t} possible zero supports strictly contain {pivot}")));
    }
    let remainder = graph_gv_over(&entry.family, &knowledge).remove_vertex(v);
    let (remainder_bound, open) = max_cpr_order(remainder.vertex_count());
    Ok(BoundCertificate {
        case_id: entry.id,
        strategy: Strategy::OmegaSplit,
        bound: t.max(1) + remainder_bound,
        uses_open_order: open,
        witness: Witness::OmegaSplit { pivot: *pivot, proper_supersets, remainder, remainder_bound },
    })
}

/// `cpr ≤ max(k, tf(G(M)))` when every zero support is a union of at most two members.
pub fn strategy_tf(entry: &Table1Entry) -> Result<BoundCertificate> {
    let knowledge = apply_inference_rules(&entry.family)?;
    let possible = pair_unions(entry, Strategy::Tf, &knowledge)?;
    let graph = graph_gm(&entry.family);
    let tf = tf_exact(&graph)?;
    let k = entry.family.k();
    Ok(BoundCertificate {
        case_id: entry.id,
        strategy: Strategy::Tf,
        bound: k.max(tf.value),
        uses_open_order: false,
        witness: Witness::TriangleFree { k, possible_zero_supports: possible, graph, tf },
    })
}
