use crate::error::{Error, Result};
use crate::matrix_core::linalg::{is_psd, solve, LinearSolution};
use crate::matrix_core::polytope::{barycentre, max_support, vertices};
use crate::matrix_core::rational::{one, zero, Rational};
use crate::matrix_core::{IndexSet, SymMatrix};
use num_traits::Signed;
use rayon::prelude::*;

/// Largest dimension accepted by the face enumeration.
pub const MAX_COPOSITIVE_DIM: usize = 12;

/// A face of the simplex whose relative interior attains the minimum.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceMinimum {
    pub support: IndexSet,
    /// Point of the simplex with exactly this support attaining the minimum.
    pub witness: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimplexMinimum {
    pub value: Rational,
    /// Sorted by support.
    pub faces: Vec<FaceMinimum>,
}

fn check_dim(a: &SymMatrix) -> Result<()> {
    if a.n() == 0 {
        return Err(Error::PreconditionViolated("empty matrix".into()));
    }
    if a.n() > MAX_COPOSITIVE_DIM {
        return Err(Error::DimensionTooLarge(a.n(), MAX_COPOSITIVE_DIM));
    }
    Ok(())
}

/// Stationarity system on face `σ`: `A[σ]u − λ1 = 0`, `Σu = 1`, unknowns `(u, λ)`.
fn kkt_system(a: &SymMatrix, face: &IndexSet) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let idx = face.positions();
    let k = idx.len();
    let mut rows = Vec::with_capacity(k + 1);
    for &i in &idx {
        let mut row: Vec<Rational> = idx.iter().map(|&j| a.get(i, j).clone()).collect();
        row.push(-one());
        rows.push(row);
    }
    let mut last = vec![one(); k];
    last.push(zero());
    rows.push(last);
    let mut rhs = vec![zero(); k];
    rhs.push(one());
    (rows, rhs)
}

/// Value of the unique interior stationary point of a face, if there is one.
///
/// A minimiser with inclusion-minimal support always has a nonsingular
/// stationarity system (otherwise moving along the kernel keeps the value and
/// reaches a smaller face), so the global minimum is the least of these values.
fn interior_stationary_value(a: &SymMatrix, face: &IndexSet) -> Option<Rational> {
    let (rows, rhs) = kkt_system(a, face);
    let k = face.len();
    match solve(&rows, &rhs, k + 1) {
        LinearSolution::Unique(x) if x[..k].iter().all(Signed::is_positive) => Some(x[k].clone()),
        _ => None,
    }
}

/// Exact minimum of `xᵀAx` over the standard simplex, with every face whose
/// relative interior attains it.
pub fn simplex_minimum(a: &SymMatrix) -> Result<SimplexMinimum> {
    let value = minimum_value(a)?;
    let n = a.n();
    let mut faces: Vec<FaceMinimum> = IndexSet::all_nonempty(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|face| face_attains(a, &face, &value).map(|witness| FaceMinimum { support: face, witness }))
        .collect();
    faces.sort_by(|x, y| x.support.cmp(&y.support));
    Ok(SimplexMinimum { value, faces })
}

pub(crate) fn minimum_value(a: &SymMatrix) -> Result<Rational> {
    check_dim(a)?;
    let n = a.n();
    let best = IndexSet::all_nonempty(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|face| interior_stationary_value(a, &face))
        .min()
        .expect("vertices are always stationary");
    Ok(best)
}

/// Point with support exactly `face` attaining `value`, if one exists.
fn face_attains(a: &SymMatrix, face: &IndexSet, value: &Rational) -> Option<Vec<Rational>> {
    let n = a.n();
    let k = face.len();
    // An interior minimiser makes (A − value·J)[σ] positive semidefinite.
    let shifted = a.principal(face).sub(&SymMatrix::ones(k).scale(value));
    if !is_psd(&shifted).psd {
        return None;
    }
    let (rows, rhs) = kkt_system(a, face);
    let local = match solve(&rows, &rhs, k + 1) {
        LinearSolution::Inconsistent => return None,
        LinearSolution::Unique(x) => {
            if &x[k] != value || !x[..k].iter().all(Signed::is_positive) {
                return None;
            }
            x[..k].to_vec()
        }
        LinearSolution::Affine { .. } => {
            // Fix λ = value and look for a full-support point of the polytope.
            let eq: Vec<Vec<Rational>> = rows.iter().map(|r| r[..k].to_vec()).collect();
            let mut b: Vec<Rational> = vec![value.clone(); k];
            b.push(one());
            let vs = vertices(&eq, &b, k);
            if max_support(&vs, k) != IndexSet::full(k) {
                return None;
            }
            barycentre(&vs, k)?
        }
    };
    let mut w = vec![zero(); n];
    for (p, v) in face.iter().zip(local) {
        w[p] = v;
    }
    Some(w)
}

/// `xᵀAx ≥ 0` for every `x ≥ 0`.
pub fn is_copositive(a: &SymMatrix) -> Result<bool> {
    Ok(!minimum_value(a)?.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copositive::horn_matrix;
    use crate::matrix_core::rational::{int, rat};

    #[test]
    fn identity_minimum_at_barycentre() {
        let m = simplex_minimum(&SymMatrix::identity(3)).unwrap();
        assert_eq!(m.value, rat(1, 3));
        assert_eq!(m.faces.len(), 1);
        assert_eq!(m.faces[0].support, IndexSet::full(3));
        assert_eq!(m.faces[0].witness, vec![rat(1, 3); 3]);
    }

    #[test]
    fn horn_minimum_is_zero_on_ten_faces() {
        let m = simplex_minimum(&horn_matrix()).unwrap();
        assert_eq!(m.value, int(0));
        assert_eq!(m.faces.len(), 10);
    }

    #[test]
    fn rank_one_pair() {
        let a = SymMatrix::from_i64_rows(&[&[1, -1], &[-1, 1]]).unwrap();
        let m = simplex_minimum(&a).unwrap();
        assert_eq!(m.value, int(0));
        assert_eq!(m.faces[0].witness, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn copositivity_decisions() {
        assert!(is_copositive(&horn_matrix()).unwrap());
        assert!(!is_copositive(&SymMatrix::identity(2).scale(&int(-1))).unwrap());
        let perturbed = horn_matrix().sub(&SymMatrix::unit_pair(5, 0, 1).scale(&rat(1, 10)));
        assert!(!is_copositive(&perturbed).unwrap());
        // evaluated at e1 + e2
        let u = vec![int(1), int(1), int(0), int(0), int(0)];
        assert_eq!(perturbed.quad_form(&u), rat(-1, 5));
    }

    #[test]
    fn dimension_limits() {
        assert_eq!(is_copositive(&SymMatrix::identity(13)).unwrap_err(), Error::DimensionTooLarge(13, 12));
        assert!(is_copositive(&SymMatrix::zeros(0)).is_err());
    }
}
