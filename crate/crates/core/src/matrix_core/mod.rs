//! Exact rational symmetric-matrix kernel.

mod dd;
mod graph;
mod index_set;
pub mod linalg;
pub mod polytope;
pub mod rational;
mod scaling;
mod sym_matrix;

pub use dd::{check_dd_witness, dd_orbit_witness, primitive_integer};
pub use graph::{graph_minus_one, graph_of, GraphPredicates, LabeledGraph};
pub use index_set::IndexSet;
pub use linalg::{is_psd, PsdReport};
pub use rational::{rat, Rational, RationalJson};
pub use scaling::{unit_diagonal_scale, Surd, SurdMatrix, UnitDiagonalScaling};
pub use sym_matrix::SymMatrix;
