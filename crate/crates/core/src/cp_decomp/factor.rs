use crate::copositive::MinimalZeroMatrix;
use crate::error::{Error, Result};
use crate::matrix_core::polytope::vertices;
use crate::matrix_core::rational::Rational;
use crate::matrix_core::IndexSet;
use num_traits::Signed;
use serde::Serialize;

/// Nonnegative `X` (`k × m`) with `W·X = B`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroCoordinates {
    #[serde(serialize_with = "serialize_rows")]
    pub x: Vec<Vec<Rational>>,
    /// Support of each column of `X`, indexing columns of `W`.
    pub column_supports: Vec<IndexSet>,
}

fn serialize_rows<S: serde::Serializer>(rows: &[Vec<Rational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use crate::matrix_core::RationalJson;
    let wire: Vec<Vec<RationalJson>> = rows.iter().map(|r| r.iter().cloned().map(RationalJson).collect()).collect();
    wire.serialize(s)
}

impl ZeroCoordinates {
    /// Recomputes `W·X` and compares with `B` exactly.
    pub fn reproduces(&self, w: &MinimalZeroMatrix, b: &[Vec<Rational>]) -> bool {
        let wm = w.matrix();
        let m = self.column_supports.len();
        (0..w.n).all(|i| {
            (0..m).all(|j| {
                let s: Rational = (0..w.k()).map(|c| &wm[i][c] * &self.x[c][j]).sum();
                s == b[i][j]
            })
        })
    }
}

/// Expresses each column of `B` (`n × m`, row-major) over the minimal zeros.
///
/// Each column of `X` is a vertex of `{x ≥ 0 : Wx = b_j}` of least support
/// size; ties go to the lexicographically least support.
pub fn factor_through_zeros(b: &[Vec<Rational>], w: &MinimalZeroMatrix) -> Result<ZeroCoordinates> {
    let n = w.n;
    if b.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: b.len() });
    }
    let m = b.first().map_or(0, Vec::len);
    if b.iter().any(|r| r.len() != m) {
        return Err(Error::PreconditionViolated("ragged matrix B".into()));
    }
    if let Some(i) = b.iter().position(|r| r.iter().any(Signed::is_negative)) {
        let j = b[i].iter().position(Signed::is_negative).expect("negative entry");
        return Err(Error::NotNonnegative(i, j));
    }
    let k = w.k();
    let wm = w.matrix();
    let mut x = vec![Vec::with_capacity(m); k];
    let mut column_supports = Vec::with_capacity(m);
    for j in 0..m {
        let col: Vec<Rational> = b.iter().map(|r| r[j].clone()).collect();
        let best = vertices(&wm, &col, k)
            .into_iter()
            .min_by(|p, q| p.support.len().cmp(&q.support.len()).then_with(|| p.support.cmp(&q.support)))
            .ok_or(Error::NotInCone(j))?;
        for (row, v) in x.iter_mut().zip(best.point) {
            row.push(v);
        }
        column_supports.push(best.support);
    }
    Ok(ZeroCoordinates { x, column_supports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copositive::{horn_matrix, minimal_zeros};
    use crate::matrix_core::rational::int;

    fn col(v: &[i64]) -> Vec<Vec<Rational>> {
        v.iter().map(|&x| vec![int(x)]).collect()
    }

    #[test]
    fn w_factors_as_identity() {
        let w = minimal_zeros(&horn_matrix()).unwrap();
        let b = w.matrix();
        let z = factor_through_zeros(&b, &w).unwrap();
        for (i, row) in z.x.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                assert_eq!(v, &int(i64::from(i == j)));
            }
        }
        assert!(z.reproduces(&w, &b));
    }

    #[test]
    fn horn_adjacent_sum() {
        let w = minimal_zeros(&horn_matrix()).unwrap();
        let b = col(&[1, 2, 1, 0, 0]);
        let z = factor_through_zeros(&b, &w).unwrap();
        // Columns of W are ordered {1,2},{1,5},{2,3},{3,4},{4,5}.
        assert_eq!(z.column_supports[0], IndexSet::from_positions(5, &[0, 2]));
        assert!(z.reproduces(&w, &b));
    }

    #[test]
    fn not_in_cone() {
        let w = minimal_zeros(&horn_matrix()).unwrap();
        assert_eq!(factor_through_zeros(&col(&[1, 0, 0, 0, 0]), &w).unwrap_err(), Error::NotInCone(0));
    }
}
