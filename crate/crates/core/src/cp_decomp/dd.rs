use super::terms::{CpTerm, WeightedCpDecomposition};
use crate::error::{Error, Result};
use crate::matrix_core::rational::{one, zero, Rational};
use crate::matrix_core::{check_dd_witness, SymMatrix};
use num_traits::Signed;

/// Decomposition into terms with at most two nonzero entries, given a positive
/// `d` making `diag(d)·A·diag(d)` diagonally dominant.
///
/// Each positive `a_ij` contributes `d_j e_i + d_i e_j` with weight
/// `a_ij/(d_i d_j)`; each row with positive slack `d_i a_ii − Σ_j a_ij d_j`
/// contributes `e_i` with weight `slack/d_i`.
pub fn dd_decomposition(a: &SymMatrix, d: &[Rational]) -> Result<WeightedCpDecomposition> {
    let n = a.n();
    if d.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: d.len() });
    }
    if let Some((i, j)) = a.first_negative() {
        return Err(Error::NotNonnegative(i, j));
    }
    if !d.iter().all(Signed::is_positive) {
        return Err(Error::PreconditionViolated("diagonal witness must be positive".into()));
    }
    check_dd_witness(a, d).map_err(Error::NotDiagonallyDominant)?;

    let mut terms = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let aij = a.get(i, j);
            if aij.is_positive() {
                let mut v = vec![zero(); n];
                v[i] = d[j].clone();
                v[j] = d[i].clone();
                terms.push(CpTerm::new(v, aij / (&d[i] * &d[j])));
            }
        }
    }
    for i in 0..n {
        let off: Rational = (0..n).filter(|&j| j != i).map(|j| a.get(i, j) * &d[j]).sum();
        let slack = &d[i] * a.get(i, i) - off;
        if slack.is_positive() {
            let mut v = vec![zero(); n];
            v[i] = one();
            terms.push(CpTerm::new(v, slack / &d[i]));
        }
    }
    WeightedCpDecomposition::new(n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix_core::dd_orbit_witness;
    use crate::matrix_core::rational::int;

    #[test]
    fn two_by_two() {
        let a = SymMatrix::from_i64_rows(&[&[2, 1], &[1, 2]]).unwrap();
        let dec = dd_decomposition(&a, &[int(1), int(1)]).unwrap();
        assert_eq!(dec.len(), 3);
        assert_eq!(dec.realize(), a);
    }

    #[test]
    fn identity_and_rank_one() {
        let dec = dd_decomposition(&SymMatrix::identity(4), &vec![int(1); 4]).unwrap();
        assert_eq!(dec.len(), 4);
        let j = SymMatrix::ones(2);
        let dec = dd_decomposition(&j, &[int(1), int(1)]).unwrap();
        assert_eq!(dec.len(), 1);
        assert_eq!(dec.realize(), j);
    }

    #[test]
    fn needs_scaling() {
        let a = SymMatrix::from_i64_rows(&[&[1, 2, 0], &[2, 9, 3], &[0, 3, 4]]).unwrap();
        assert!(dd_decomposition(&a, &vec![int(1); 3]).is_err());
        let d = dd_orbit_witness(&a).unwrap().unwrap();
        let dec = dd_decomposition(&a, &d).unwrap();
        assert_eq!(dec.realize(), a);
        assert!(dec.supports().iter().all(|s| s.len() <= 2));
    }

    #[test]
    fn rejects_bad_witness() {
        let a = SymMatrix::from_i64_rows(&[&[1, 2], &[2, 1]]).unwrap();
        assert_eq!(dd_decomposition(&a, &[int(1), int(1)]).unwrap_err(), Error::NotDiagonallyDominant(0));
    }
}
