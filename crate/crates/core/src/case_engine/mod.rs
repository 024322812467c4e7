//! The 44 potential minimal-support families of an exceptional extremal 6×6
//! copositive matrix with unit diagonal, and for each a certificate bounding
//! the cp-rank of every completely positive matrix orthogonal to it.
//!
//! Which argument applies to which family is fixed data stored with the
//! table. The engine checks that the argument goes through and records
//! enough of it that [`verify_certificate`] can re-derive the bound.

mod certificate;
mod horn_case;
mod lemma;
mod prune;
mod report;
mod strategies;
mod table;
mod verify;

pub use certificate::{BoundCertificate, Configuration, HPlusZeroWitness, HornBlock, HornWitness, Witness};
pub use lemma::{lemma_h_plus_0, HPlusZero};
pub use prune::strategy_prune;
pub use report::{
    diagnostics, figure_checks, k33_matrix, run_case, verify_theorem_main, CaseReport, Coverage, Diagnostic,
    FigureCheck, FigureGraph, FigureSpec, TheoremReport, FIGURES, TARGET_BOUND,
};
pub use strategies::{strategy_dd, strategy_low_degree, strategy_omega_split, strategy_tf};
pub use table::{load_table1, parse_table1, Strategy, Table1Entry, TABLE1_ROWS};
pub use verify::verify_certificate;
