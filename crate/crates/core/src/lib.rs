//! Exact analysis of copositive and completely positive matrices.
//!
//! The crate is organised bottom-up:
//!
//! - [`matrix_core`]: rational symmetric matrices, index sets, PSD decisions,
//!   diagonal scaling orbits and the graphs attached to a matrix.
//! - [`copositive`]: copositivity by face enumeration, zeros, minimal zeros and
//!   irreducibility.
//! - [`cp_decomp`]: weighted cp-decompositions and their rewrites, plus the
//!   graph-based cp-rank bound rules.
//! - [`zero_structure`]: combinatorics of minimal-support families, the
//!   support graphs and an exact maximum triangle-free subgraph solver.
//! - [`case_engine`]: the 44 potential minimal-support sets of extremal
//!   exceptional 6×6 copositive matrices and a certificate for each.
//!
//! All structural decisions are made in exact rational arithmetic. The only
//! floating-point routine is [`cp_decomp::nearly_positive_witness`], whose
//! output is a witness and never feeds an exact decision.

pub mod case_engine;
pub mod copositive;
pub mod cp_decomp;
pub mod error;
pub mod matrix_core;
pub mod zero_structure;

pub use error::{Error, Result};
pub use matrix_core::{IndexSet, LabeledGraph, Rational, SymMatrix};
