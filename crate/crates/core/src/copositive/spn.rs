use crate::error::{Error, Result};
use crate::matrix_core::linalg::rank;
use crate::matrix_core::rational::{int, one};
use crate::matrix_core::{graph_minus_one, LabeledGraph, SymMatrix};

fn check_preconditions(a: &SymMatrix) -> Result<LabeledGraph> {
    let n = a.n();
    let minus_one = -one();
    for i in 0..n {
        if a.get(i, i) != &one() {
            return Err(Error::PreconditionViolated(format!("diagonal entry {} is not 1", i + 1)));
        }
        for j in 0..n {
            if a.get(i, j) < &minus_one {
                return Err(Error::PreconditionViolated(format!(
                    "entry ({},{}) is below -1",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let g = graph_minus_one(a);
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("G_{-1} is not connected".into()));
    }
    Ok(g)
}

/// SPN test for unit-diagonal matrices with entries `≥ -1` and connected `G_{-1}`:
/// the graph must be bipartite and every pair at even distance must have an
/// entry of at least 1.
pub fn spn_connected_test(a: &SymMatrix) -> Result<bool> {
    let g = check_preconditions(a)?;
    if !g.is_bipartite() {
        return Ok(false);
    }
    let n = a.n();
    for i in 0..n {
        let dist = g.distances_from(i);
        for j in (i + 1)..n {
            let d = dist[j].expect("connected");
            if d % 2 == 0 && a.get(i, j) < &one() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// PSD test under the same preconditions: the matrix must be a rank-one `±1`
/// matrix whose `-1` pattern is complete bipartite.
pub fn psd_rank1_pm1_test(a: &SymMatrix) -> Result<bool> {
    let g = check_preconditions(a)?;
    let n = a.n();
    let pm1 = (0..n).all(|i| (0..n).all(|j| a.get(i, j) == &int(1) || a.get(i, j) == &int(-1)));
    if !pm1 {
        return Ok(false);
    }
    Ok(rank(&a.rows(), n) == 1 && g.complete_bipartition().is_some())
}
