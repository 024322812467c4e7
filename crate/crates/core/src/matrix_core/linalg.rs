//! Exact Gaussian elimination, nullspaces and the Schur-complement PSD test.

use super::rational::{one, zero, Rational};
use super::sym_matrix::SymMatrix;
use num_traits::{Signed, Zero};

/// Reduced row echelon form of a dense rational matrix.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Vec<Rational>>,
    /// Pivot column of each nonzero row, in order.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

pub fn rref(mut m: Vec<Vec<Rational>>, cols: usize) -> Rref {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = one() / &m[r][c];
        for v in m[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    Rref { rows: m, pivots, cols }
}

pub fn rank(m: &[Vec<Rational>], cols: usize) -> usize {
    rref(m.to_vec(), cols).pivots.len()
}

/// Basis of `{x : M x = 0}`, one vector per free column.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let r = rref(m.to_vec(), cols);
    let mut is_pivot = vec![false; cols];
    for &p in &r.pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![zero(); cols];
        v[free] = one();
        for (row, &p) in r.rows.iter().zip(&r.pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Solution set of `M x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum LinearSolution {
    Inconsistent,
    Unique(Vec<Rational>),
    /// A particular solution plus the dimension of the solution space.
    Affine { particular: Vec<Rational>, dim: usize },
}

pub fn solve(m: &[Vec<Rational>], b: &[Rational], cols: usize) -> LinearSolution {
    let aug: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let r = rref(aug, cols + 1);
    if r.pivots.last() == Some(&cols) {
        return LinearSolution::Inconsistent;
    }
    let mut x = vec![zero(); cols];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        x[p] = row[cols].clone();
    }
    let dim = cols - r.pivots.len();
    if dim == 0 {
        LinearSolution::Unique(x)
    } else {
        LinearSolution::Affine { particular: x, dim }
    }
}

/// Result of the exact positive-semidefiniteness test.
#[derive(Debug, Clone, PartialEq)]
pub struct PsdReport {
    pub psd: bool,
    /// Exact basis of the nullspace; populated only when `psd` holds.
    pub nullspace: Vec<Vec<Rational>>,
}

/// Decides `xᵀAx ≥ 0` for all real `x` by recursive Schur complementation.
///
/// At each step the largest positive diagonal entry is used as pivot. A
/// negative diagonal entry, or a zero diagonal entry with a nonzero row once no
/// positive pivot remains, certifies indefiniteness.
pub fn is_psd(a: &SymMatrix) -> PsdReport {
    let psd = schur_psd(a);
    let nullspace = if psd { nullspace(&a.rows(), a.n()) } else { Vec::new() };
    PsdReport { psd, nullspace }
}

fn schur_psd(a: &SymMatrix) -> bool {
    let mut s: Vec<Vec<Rational>> = a.rows();
    loop {
        let k = s.len();
        if k == 0 {
            return true;
        }
        if (0..k).any(|i| s[i][i].is_negative()) {
            return false;
        }
        let pivot = (0..k)
            .filter(|&i| s[i][i].is_positive())
            .fold(None::<usize>, |best, i| match best {
                Some(b) if s[b][b] >= s[i][i] => Some(b),
                _ => Some(i),
            });
        let Some(p) = pivot else {
            // Zero diagonal: PSD only if the whole remaining block vanishes.
            return s.iter().all(|row| row.iter().all(Zero::is_zero));
        };
        let pp = s[p][p].clone();
        let rest: Vec<usize> = (0..k).filter(|&i| i != p).collect();
        let next: Vec<Vec<Rational>> = rest
            .iter()
            .map(|&i| {
                rest.iter()
                    .map(|&j| {
                        if s[i][p].is_zero() || s[p][j].is_zero() {
                            s[i][j].clone()
                        } else {
                            &s[i][j] - &s[i][p] * &s[p][j] / &pp
                        }
                    })
                    .collect()
            })
            .collect();
        s = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix_core::rational::int;

    fn m(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn identity_is_psd_with_trivial_nullspace() {
        let r = is_psd(&SymMatrix::identity(4));
        assert!(r.psd);
        assert!(r.nullspace.is_empty());
    }

    #[test]
    fn horn_pair_block_has_ones_kernel() {
        let r = is_psd(&m(&[&[1, -1], &[-1, 1]]));
        assert!(r.psd);
        assert_eq!(r.nullspace, vec![vec![int(1), int(1)]]);
    }

    #[test]
    fn indefinite_two_by_two() {
        assert!(!is_psd(&m(&[&[1, 2], &[2, 1]])).psd);
    }

    #[test]
    fn zero_diagonal_with_nonzero_row() {
        assert!(!is_psd(&m(&[&[0, 1], &[1, 5]])).psd);
        assert!(is_psd(&m(&[&[0, 0], &[0, 5]])).psd);
    }

    #[test]
    fn solve_classifies_systems() {
        let a = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        assert_eq!(solve(&a, &[int(1), int(3)], 2), LinearSolution::Inconsistent);
        assert!(matches!(solve(&a, &[int(1), int(2)], 2), LinearSolution::Affine { dim: 1, .. }));
        let b = vec![vec![int(2), int(0)], vec![int(0), int(4)]];
        assert_eq!(solve(&b, &[int(1), int(1)], 2), LinearSolution::Unique(vec![
            crate::matrix_core::rational::rat(1, 2),
            crate::matrix_core::rational::rat(1, 4)
        ]));
    }
}
