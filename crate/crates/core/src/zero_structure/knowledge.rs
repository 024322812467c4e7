//! Inference of zero supports from the minimal-support family alone.
//!
//! The rules assume the family belongs to an exceptional extremal copositive
//! matrix with unit diagonal, so size-2 members mark the `-1` entries and
//! any entry between two `-1` neighbours is forced to `+1`.

use super::family::{pair_graph, SupportFamily};
use crate::error::{Error, Result};
use crate::matrix_core::{IndexSet, LabeledGraph};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Confirmed,
    Excluded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// The set is itself a minimal support.
    Member,
    /// Zero supports are unions of minimal supports.
    NotUnionOfMembers,
    /// More than `n − 2` elements would make the matrix PSD.
    TooLarge,
    /// Two size-2 members sharing an index: their union is a zero support.
    SharedIndexUnion,
    /// Two size-2 members sharing an index: the two other indices are not.
    SharedIndexDifference,
    /// Three pairwise-meeting size-2 members: the union is a zero support.
    PairwiseMeetingPairs,
    /// Three members with pairwise zero-support unions.
    PairwiseZeroUnions,
    /// A size-4 set with a size-3 member must be the union of exactly two members.
    ContainsSizeThreeMember,
    /// Three or more members inside a set must be size-2 pairs forming `K_{1,3}` or `K_{2,2}`.
    ThreeMembersNotBipartite,
    /// Connected spanning `-1` pattern that is not complete bipartite: block not PSD.
    PatternNotCompleteBipartite,
    /// Connected spanning `-1` pattern that is complete bipartite: block is a rank-one `±1` PSD matrix.
    PatternCompleteBipartite,
    /// Forced `±1` entries fix the whole block as rank one, and it would have a
    /// `-1` entry that is not a size-2 member (or no consistent signs at all).
    ForcedSignPattern,
    /// A size-4 set inside a 5-set whose pairs are all covered by zero supports.
    IrreducibleFiveSubset,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub set: IndexSet,
    pub status: Status,
    pub rule: Rule,
    /// The sets the rule was applied to.
    pub premises: Vec<IndexSet>,
}

/// What is known about which subsets are zero supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroSupportKnowledge {
    pub n: usize,
    pub facts: BTreeMap<IndexSet, Fact>,
    /// Unions forced by three-member closure that exceed the size limit.
    pub conflicts: Vec<Vec<IndexSet>>,
}

impl ZeroSupportKnowledge {
    pub fn new(n: usize) -> Self {
        ZeroSupportKnowledge { n, facts: BTreeMap::new(), conflicts: Vec::new() }
    }

    pub fn status(&self, set: &IndexSet) -> Option<Status> {
        self.facts.get(set).map(|f| f.status)
    }

    pub fn is_confirmed(&self, set: &IndexSet) -> bool {
        self.status(set) == Some(Status::Confirmed)
    }

    pub fn is_excluded(&self, set: &IndexSet) -> bool {
        self.status(set) == Some(Status::Excluded)
    }

    pub fn fact(&self, set: &IndexSet) -> Option<&Fact> {
        self.facts.get(set)
    }

    pub fn confirmed(&self) -> Vec<IndexSet> {
        self.with_status(Status::Confirmed)
    }

    pub fn excluded(&self) -> Vec<IndexSet> {
        self.with_status(Status::Excluded)
    }

    fn with_status(&self, s: Status) -> Vec<IndexSet> {
        self.facts.values().filter(|f| f.status == s).map(|f| f.set).collect()
    }

    /// Records a fact; returns whether it was new.
    pub fn add(&mut self, fact: Fact) -> Result<bool> {
        match self.facts.get(&fact.set) {
            Some(old) if old.status == fact.status => Ok(false),
            Some(old) => Err(Error::InconsistentFamily(format!(
                "{} is both {:?} ({:?}) and {:?} ({:?})",
                fact.set, old.status, old.rule, fact.status, fact.rule
            ))),
            None => {
                self.facts.insert(fact.set, fact);
                Ok(true)
            }
        }
    }

    fn confirm(&mut self, set: IndexSet, rule: Rule, premises: Vec<IndexSet>) -> Result<bool> {
        self.add(Fact { set, status: Status::Confirmed, rule, premises })
    }

    fn exclude(&mut self, set: IndexSet, rule: Rule, premises: Vec<IndexSet>) -> Result<bool> {
        self.add(Fact { set, status: Status::Excluded, rule, premises })
    }
}

/// Whether a zero support on `set` is impossible because the entries forced
/// to `±1` determine a rank-one block that is not compatible with the members.
///
/// In a positive semidefinite block with unit diagonal an entry of `±1` makes
/// the two Gram vectors equal up to sign. Size-2 members give the `-1`
/// entries; two indices with a common `-1` neighbour have a `+1` entry.
fn sign_pattern_violated(neg: &LabeledGraph, set: &IndexSet) -> bool {
    let pos = set.positions();
    let mut sign: Vec<i8> = vec![0; pos.len()];
    sign[0] = 1;
    let mut stack = vec![0];
    while let Some(a) = stack.pop() {
        for b in 0..pos.len() {
            let (i, j) = (pos[a], pos[b]);
            let rel = if a == b {
                continue;
            } else if neg.has_edge(i, j) {
                -1
            } else if neg.neighbors_mask(i) & neg.neighbors_mask(j) != 0 {
                1
            } else {
                continue;
            };
            if sign[b] == 0 {
                sign[b] = rel * sign[a];
                stack.push(b);
            } else if sign[b] != rel * sign[a] {
                return true;
            }
        }
    }
    if sign.contains(&0) {
        return false;
    }
    (0..pos.len()).any(|a| (a + 1..pos.len()).any(|b| sign[a] != sign[b] && !neg.has_edge(pos[a], pos[b])))
}

fn size_two(family: &SupportFamily) -> Vec<IndexSet> {
    family.supports.iter().filter(|s| s.len() == 2).copied().collect()
}

/// Fixed-point closure of the inference rules over all subsets of size ≥ 2.
pub fn apply_inference_rules(family: &SupportFamily) -> Result<ZeroSupportKnowledge> {
    apply_inference_rules_with(family, &[])
}

/// As [`apply_inference_rules`], with externally derived facts recorded first.
pub fn apply_inference_rules_with(family: &SupportFamily, extra: &[Fact]) -> Result<ZeroSupportKnowledge> {
    let n = family.n;
    let mut k = ZeroSupportKnowledge::new(n);
    for s in &family.supports {
        k.confirm(*s, Rule::Member, vec![])?;
    }
    for f in extra {
        k.add(f.clone())?;
    }

    let pairs = size_two(family);
    for (a, p) in pairs.iter().enumerate() {
        for q in &pairs[a + 1..] {
            if p.intersects(q) {
                k.confirm(p.union(q), Rule::SharedIndexUnion, vec![*p, *q])?;
                let diff = p.union(q).difference(&p.intersection(q));
                k.exclude(diff, Rule::SharedIndexDifference, vec![*p, *q])?;
            }
        }
    }
    for (a, p) in pairs.iter().enumerate() {
        for (b, q) in pairs.iter().enumerate().skip(a + 1) {
            for r in &pairs[b + 1..] {
                if p.intersects(q) && q.intersects(r) && p.intersects(r) {
                    let u = p.union(q).union(r);
                    k.confirm(u, Rule::PairwiseMeetingPairs, vec![*p, *q, *r])?;
                }
            }
        }
    }

    let neg = pair_graph(family, &IndexSet::full(n));
    let all: Vec<IndexSet> = IndexSet::all_nonempty(n).filter(|s| s.len() >= 2).collect();
    for set in &all {
        let inside = family.members_within(set);
        let premises: Vec<IndexSet> = inside.iter().map(|&i| family.supports[i]).collect();
        if set.len() == 4 {
            let g = pair_graph(family, set);
            if g.edge_count() > 0 && g.is_connected() {
                if g.complete_bipartition().is_some() {
                    k.confirm(*set, Rule::PatternCompleteBipartite, premises.clone())?;
                } else {
                    k.exclude(*set, Rule::PatternNotCompleteBipartite, premises.clone())?;
                }
            }
        }
        if inside.len() >= 3 && !k.is_confirmed(set) {
            if set.len() == 4 && premises.iter().any(|s| s.len() == 3) {
                k.exclude(*set, Rule::ContainsSizeThreeMember, premises.clone())?;
            } else if !(set.len() == 4 && premises.iter().all(|s| s.len() == 2) && {
                let g = pair_graph(family, set);
                g.is_connected() && g.complete_bipartition().is_some()
            }) {
                k.exclude(*set, Rule::ThreeMembersNotBipartite, premises.clone())?;
            }
        }
        if set.len() >= 3 && sign_pattern_violated(&neg, set) {
            k.exclude(*set, Rule::ForcedSignPattern, premises.clone())?;
        }
        if set.len() > family.max_zero_support() {
            k.exclude(*set, Rule::TooLarge, vec![])?;
        }
        if !family.is_union_of_members(set) {
            k.exclude(*set, Rule::NotUnionOfMembers, vec![])?;
        }
    }

    loop {
        let mut changed = false;
        let m = &family.supports;
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if !k.is_confirmed(&m[a].union(&m[b])) {
                    continue;
                }
                for c in b + 1..m.len() {
                    if k.is_confirmed(&m[a].union(&m[c])) && k.is_confirmed(&m[b].union(&m[c])) {
                        let u = m[a].union(&m[b]).union(&m[c]);
                        if u.len() > family.max_zero_support() {
                            let triple = vec![m[a], m[b], m[c]];
                            if !k.conflicts.contains(&triple) {
                                k.conflicts.push(triple);
                            }
                        } else {
                            changed |= k.confirm(u, Rule::PairwiseZeroUnions, vec![m[a], m[b], m[c]])?;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(k)
}
