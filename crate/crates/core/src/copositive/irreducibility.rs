use super::zeros::{zero_supports, ZeroAnalysis};
use crate::error::Result;
use crate::matrix_core::rational::Rational;
use crate::matrix_core::SymMatrix;
use num_traits::{Signed, Zero};
use serde::Serialize;

/// `E_ij`-irreducibility for every pair, plus the `N` / `Ñ` conjunctions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IrreducibilityReport {
    pub n: usize,
    /// Symmetric `n × n` table; `flags[i][j]` is `E_ij`-irreducibility (0-based).
    pub flags: Vec<Vec<bool>>,
    /// All pairs including `i = j`.
    pub n_irreducible: bool,
    /// Off-diagonal pairs only.
    pub n_tilde_irreducible: bool,
}

impl IrreducibilityReport {
    pub fn is_irreducible(&self, i: usize, j: usize) -> bool {
        self.flags[i][j]
    }

    /// Pairs `(i, j)` with `i ≤ j` that are reducible.
    pub fn reducible_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in i..self.n {
                if !self.flags[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn irreducibility(a: &SymMatrix) -> Result<IrreducibilityReport> {
    let z = zero_supports(a)?;
    Ok(irreducibility_from(a, &z))
}

/// Every zero is a nonnegative combination of vertex zeros of its own support
/// polytope, and `Au ≥ 0` for zeros of a copositive matrix, so a pair witnessed
/// by any zero is already witnessed by one of those vertices.
pub(crate) fn irreducibility_from(a: &SymMatrix, z: &ZeroAnalysis) -> IrreducibilityReport {
    let n = a.n();
    let mut flags = vec![vec![false; n]; n];
    let candidates = z.vertex_zeros.iter().chain(z.witnesses.iter().filter(|w| w.minimal));
    for u in candidates {
        let au = a.mul_vec(&u.vector);
        let tight: Vec<bool> = au.iter().map(Zero::is_zero).collect();
        let pos: Vec<bool> = u.vector.iter().map(Signed::is_positive).collect();
        for i in 0..n {
            if !tight[i] {
                continue;
            }
            for j in i..n {
                if tight[j] && (pos[i] || pos[j]) {
                    flags[i][j] = true;
                    flags[j][i] = true;
                }
            }
        }
    }
    let n_tilde_irreducible = (0..n).all(|i| (0..n).all(|j| i == j || flags[i][j]));
    let n_irreducible = n_tilde_irreducible && (0..n).all(|i| flags[i][i]);
    IrreducibilityReport { n, flags, n_irreducible, n_tilde_irreducible }
}

/// Checks the witness condition for a single explicit zero.
pub fn witnesses_pair(a: &SymMatrix, u: &[Rational], i: usize, j: usize) -> bool {
    let au = a.mul_vec(u);
    au[i].is_zero() && au[j].is_zero() && (u[i].is_positive() || u[j].is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copositive::horn_matrix;
    use crate::matrix_core::rational::int;

    #[test]
    fn horn_fully_irreducible() {
        let r = irreducibility(&horn_matrix()).unwrap();
        assert!(r.n_irreducible);
        assert!(r.n_tilde_irreducible);
        assert!(r.reducible_pairs().is_empty());
    }

    #[test]
    fn identity_reducible() {
        let r = irreducibility(&SymMatrix::identity(2)).unwrap();
        assert!(!r.is_irreducible(0, 1));
        assert!(!r.n_tilde_irreducible);
    }

    #[test]
    fn rank_one_pair_irreducible() {
        let a = SymMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]).unwrap();
        let r = irreducibility(&a).unwrap();
        assert!(r.is_irreducible(0, 1));
        assert!(witnesses_pair(&a, &[int(1), int(1)], 0, 1));
    }

    #[test]
    fn positive_offdiagonal_entry_is_reducible() {
        // Zeros live on {1,2}; Au has a positive third entry, so E_13 can be lowered.
        let a = SymMatrix::from_i64_rows(&[&[1, -1, 1], &[-1, 1, 1], &[1, 1, 1]]).unwrap();
        let r = irreducibility(&a).unwrap();
        assert!(r.is_irreducible(0, 1));
        assert!(!r.is_irreducible(0, 2));
        assert!(!r.is_irreducible(2, 2));
    }
}
