//! Weighted cp-decompositions, their rewrites, and graph-based cp-rank bounds.

mod bounds;
mod dd;
mod factor;
mod nearly_positive;
mod terms;

pub use bounds::{
    cpr_bound_derivation, cpr_bound_rules, cpr_triangle_free, cpr_wheel, max_cpr_order, BoundDerivation, BoundRule,
};
pub use dd::dd_decomposition;
pub use factor::{factor_through_zeros, ZeroCoordinates};
pub use nearly_positive::{nearly_positive_witness, orthogonality_defect};
pub use terms::{distinct_supports, pairmove, CpTerm, WeightedCpDecomposition};
