use super::table::Strategy;
use crate::cp_decomp::BoundDerivation;
use crate::matrix_core::{IndexSet, LabeledGraph, SymMatrix};
use crate::zero_structure::{Fact, Nogood, TriangleFreeWitness};
use serde::Serialize;

/// A cp-rank bound for every completely positive matrix orthogonal to a
/// matrix with the given minimal supports, with the data needed to re-check it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub case_id: u32,
    pub strategy: Strategy,
    pub bound: usize,
    /// Set when the argument relies on `p_m` for some `m ≥ 6`.
    pub uses_open_order: bool,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Every possible zero support contains at most two members, so the
    /// coordinate matrix has columns with at most two nonzeros.
    PairUnions { k: usize, possible_zero_supports: Vec<IndexSet> },
    LowDegree {
        pivot: IndexSet,
        degree: usize,
        /// Why each removed edge at the pivot is not a zero support.
        exclusions: Vec<Fact>,
        graph: LabeledGraph,
        remainder: LabeledGraph,
        remainder_bound: usize,
        /// The rule engine's bound for the remainder; informational.
        refined_remainder: BoundDerivation,
    },
    OmegaSplit {
        pivot: IndexSet,
        /// Possible zero supports strictly containing the pivot.
        proper_supersets: Vec<IndexSet>,
        remainder: LabeledGraph,
        remainder_bound: usize,
    },
    TriangleFree { k: usize, possible_zero_supports: Vec<IndexSet>, graph: LabeledGraph, tf: TriangleFreeWitness },
    Horn(Box<HornWitness>),
    Forest { exclusions: Vec<Fact>, graph: LabeledGraph, derivation: BoundDerivation },
    Cube { nogoods: Vec<Nogood>, graph: LabeledGraph, configurations: Vec<Configuration> },
    HPlusZero(Box<HPlusZeroWitness>),
}

/// A 5-set whose `-1` pattern is a 5-cycle, as in the Horn matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornBlock {
    pub five_subset: IndexSet,
    /// Cycle order of the labels.
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HornWitness {
    pub horn_blocks: Vec<HornBlock>,
    /// The `±1` matrix forced by the blocks and the shared-neighbour rule.
    pub pattern: SymMatrix,
    /// 4-set with a `K_{2,2}` pattern that is a maximal zero support.
    pub block: IndexSet,
    /// The edge between the two members not needed to represent zeros inside `block`.
    pub dropped: (IndexSet, IndexSet),
    pub graph: LabeledGraph,
    pub pivot: IndexSet,
    pub degree: usize,
    pub remainder: LabeledGraph,
    pub remainder_tf: TriangleFreeWitness,
}

/// One maximal choice of which uncertain size-4 unions are zero supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Configuration {
    pub kept: Vec<IndexSet>,
    pub edges: usize,
    pub derivation: BoundDerivation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HPlusZeroWitness {
    pub minimal_supports: Vec<IndexSet>,
    pub zero_supports: Vec<IndexSet>,
    /// Minimal supports joined when their union is a zero support.
    pub graph: LabeledGraph,
    pub host: LabeledGraph,
    /// Image of each vertex of `graph` in `host`.
    pub embedding: Vec<usize>,
    pub derivation: BoundDerivation,
}
