//! Extremal exceptional 6×6 matrices with a zero diagonal entry are, up to
//! orbit, a 5×5 exceptional extremal matrix bordered by a zero row and column.
//! Two families of such 5×5 matrices exist; both are handled here.

use super::certificate::{BoundCertificate, HPlusZeroWitness, Witness};
use super::table::Strategy;
use crate::copositive::{horn_matrix, zero_supports};
use crate::cp_decomp::{cpr_bound_derivation, cpr_wheel};
use crate::error::{Error, Result};
use crate::matrix_core::{IndexSet, LabeledGraph, SymMatrix};
use serde::Serialize;

/// Minimal supports of a Hildebrand matrix; its only zeros are the minimal ones.
const HILDEBRAND_SUPPORTS: [[usize; 3]; 5] = [[1, 2, 3], [2, 3, 4], [3, 4, 5], [1, 4, 5], [1, 2, 5]];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPlusZero {
    pub horn_bound: usize,
    pub hildebrand_bound: usize,
    pub horn: BoundCertificate,
    pub hildebrand: BoundCertificate,
}

/// Members joined when their union is a zero support.
pub(crate) fn zero_union_graph(minimal: &[IndexSet], zero_supports: &[IndexSet]) -> LabeledGraph {
    let mut g = LabeledGraph::new(minimal.iter().map(|s| s.to_string()).collect());
    for i in 0..minimal.len() {
        for j in i + 1..minimal.len() {
            if zero_supports.contains(&minimal[i].union(&minimal[j])) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Every zero support's members pairwise joined in `g`, so each zero can be
/// written with coordinates supported on a clique.
pub(crate) fn zeros_are_cliques(minimal: &[IndexSet], zero_supports: &[IndexSet], g: &LabeledGraph) -> bool {
    zero_supports.iter().all(|z| {
        let inside: Vec<usize> = (0..minimal.len()).filter(|&i| minimal[i].is_subset(z)).collect();
        inside.iter().enumerate().all(|(a, &i)| inside[a + 1..].iter().all(|&j| g.has_edge(i, j)))
    })
}

fn certificate(minimal: Vec<IndexSet>, zero_supports: Vec<IndexSet>, host: LabeledGraph) -> Result<BoundCertificate> {
    let graph = zero_union_graph(&minimal, &zero_supports);
    if !zeros_are_cliques(&minimal, &zero_supports, &graph) {
        return Err(Error::PreconditionViolated("a zero support's members are not pairwise joined".into()));
    }
    let embedding = graph
        .embedding_into(&host)
        .ok_or_else(|| Error::PreconditionViolated("support graph does not embed into the host".into()))?;
    let derivation = cpr_bound_derivation(&graph);
    Ok(BoundCertificate {
        case_id: 0,
        strategy: Strategy::HPlusZero,
        bound: derivation.bound,
        uses_open_order: derivation.flagged,
        witness: Witness::HPlusZero(Box::new(HPlusZeroWitness {
            minimal_supports: minimal,
            zero_supports,
            graph,
            host,
            embedding,
            derivation,
        })),
    })
}

/// Horn ⊕ 0 from its exact zero set; the support graph embeds into `W_6`.
fn horn_branch() -> Result<BoundCertificate> {
    let m = horn_matrix().direct_sum(&SymMatrix::zeros(1));
    let zeros = zero_supports(&m)?;
    let mut minimal = zeros.minimal_supports();
    minimal.sort_by_key(|s| (s.len() == 1, s.labels()));
    certificate(minimal, zeros.supports.clone(), LabeledGraph::wheel(6))
}

/// Hildebrand ⊕ 0 from the support pattern; the graph embeds into a star.
fn hildebrand_branch() -> Result<BoundCertificate> {
    let n = 6;
    let six = IndexSet::from_labels(n, &[6]);
    let mut minimal: Vec<IndexSet> = HILDEBRAND_SUPPORTS.iter().map(|l| IndexSet::from_labels(n, l)).collect();
    let mut zeros: Vec<IndexSet> = minimal.iter().flat_map(|s| [*s, s.union(&six)]).collect();
    zeros.push(six);
    minimal.push(six);
    certificate(minimal, zeros, LabeledGraph::complete_bipartite(5, 1))
}

/// Bounds for completely positive matrices orthogonal to Horn ⊕ 0 and to a Hildebrand matrix ⊕ 0.
pub fn lemma_h_plus_0() -> HPlusZero {
    let horn = horn_branch().expect("Horn ⊕ 0 zero structure");
    let hildebrand = hildebrand_branch().expect("Hildebrand ⊕ 0 pattern");
    debug_assert_eq!(horn.bound, cpr_wheel(6));
    HPlusZero { horn_bound: horn.bound, hildebrand_bound: hildebrand.bound, horn, hildebrand }
}
