use crate::error::{Error, Result};
use crate::matrix_core::IndexSet;
use serde::Serialize;

/// The minimal supports `σ_1..σ_k` of a copositive matrix, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupportFamily {
    pub n: usize,
    pub supports: Vec<IndexSet>,
}

impl SupportFamily {
    pub fn new(n: usize, supports: Vec<IndexSet>) -> Result<Self> {
        for (i, s) in supports.iter().enumerate() {
            if s.ground() != n {
                return Err(Error::DimensionMismatch { expected: n, got: s.ground() });
            }
            if s.len() < 2 {
                return Err(Error::InconsistentFamily(format!("support {s} has fewer than two elements")));
            }
            if supports[..i].contains(s) {
                return Err(Error::InconsistentFamily(format!("support {s} listed twice")));
            }
        }
        Ok(SupportFamily { n, supports })
    }

    /// From 1-based label lists.
    pub fn from_labels(n: usize, supports: &[&[usize]]) -> Result<Self> {
        Self::new(n, supports.iter().map(|l| IndexSet::from_labels(n, l)).collect())
    }

    pub fn k(&self) -> usize {
        self.supports.len()
    }

    /// Indices of the members contained in `set`.
    pub fn members_within(&self, set: &IndexSet) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.supports[i].is_subset(set)).collect()
    }

    /// Whether `set` is a union of members.
    pub fn is_union_of_members(&self, set: &IndexSet) -> bool {
        let cover = self
            .members_within(set)
            .into_iter()
            .fold(IndexSet::empty(self.n), |acc, i| acc.union(&self.supports[i]));
        !set.is_empty() && cover == *set
    }

    /// Largest possible zero support of an exceptional matrix of this order.
    pub fn max_zero_support(&self) -> usize {
        self.n.saturating_sub(2)
    }

    /// Whether every pair inside `set` lies in a member (or one of `extra`)
    /// that is itself contained in `set`.
    pub fn covers_pairs(&self, set: &IndexSet, extra: &[IndexSet]) -> bool {
        let inside: Vec<&IndexSet> = self.supports.iter().chain(extra).filter(|s| s.is_subset(set)).collect();
        let p = set.positions();
        p.iter().enumerate().all(|(a, &i)| {
            p[a + 1..].iter().all(|&j| {
                let pair = IndexSet::from_positions(self.n, &[i, j]);
                inside.iter().any(|s| pair.is_subset(s))
            })
        })
    }
}

/// The graph on `set` whose edges are the size-2 members inside it.
pub(crate) fn pair_graph(family: &SupportFamily, set: &IndexSet) -> crate::matrix_core::LabeledGraph {
    let pos = set.positions();
    let labels = pos.iter().map(|p| (p + 1).to_string()).collect();
    let mut g = crate::matrix_core::LabeledGraph::new(labels);
    for s in &family.supports {
        if s.len() == 2 && s.is_subset(set) {
            let e = s.positions();
            let a = pos.binary_search(&e[0]).expect("inside");
            let b = pos.binary_search(&e[1]).expect("inside");
            g.add_edge(a, b);
        }
    }
    g
}
