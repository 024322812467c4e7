//! Exact decision procedures on the copositive cone.
//!
//! Copositivity, the zero set and irreducibility are all derived from one
//! enumeration over the faces of the standard simplex.

mod irreducibility;
mod simplex;
mod spn;
mod zeros;

pub use irreducibility::{irreducibility, witnesses_pair, IrreducibilityReport};
pub use simplex::{is_copositive, simplex_minimum, FaceMinimum, SimplexMinimum, MAX_COPOSITIVE_DIM};
pub use spn::{psd_rank1_pm1_test, spn_connected_test};
pub use zeros::{minimal_zeros, zero_supports, MinimalZeroMatrix, Zero, ZeroAnalysis};

use crate::matrix_core::SymMatrix;

/// The 5×5 Horn matrix: unit diagonal, `-1` on the cyclic neighbours
/// `{i, i+1}`, `+1` elsewhere.
pub fn horn_matrix() -> SymMatrix {
    SymMatrix::from_i64_rows(&[
        &[1, -1, 1, 1, -1],
        &[-1, 1, -1, 1, 1],
        &[1, -1, 1, -1, 1],
        &[1, 1, -1, 1, -1],
        &[-1, 1, 1, -1, 1],
    ])
    .expect("Horn matrix is symmetric")
}
