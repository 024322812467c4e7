use super::polytope::{barycentre, max_support, vertices};
use super::rational::{one, zero, Rational};
#[cfg(test)]
use super::rational::int;
use super::sym_matrix::SymMatrix;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Finds `d > 0` such that `diag(d)·A·diag(d)` is diagonally dominant.
///
/// Row `i` of the scaled matrix is dominant iff `a_ii d_i ≥ Σ_{j≠i} a_ij d_j`.
/// The feasible `d` with `Σ d = 1` form a polytope; a strictly positive point
/// exists iff the vertex supports cover every coordinate, and the barycentre
/// of the vertices is then such a point. The result is scaled to a primitive
/// integer vector.
pub fn dd_orbit_witness(a: &SymMatrix) -> Result<Option<Vec<Rational>>> {
    if let Some((i, j)) = a.first_negative() {
        return Err(Error::NotNonnegative(i, j));
    }
    let n = a.n();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    // Variables: d_0..d_{n-1}, s_0..s_{n-1} (slacks).
    let m = 2 * n;
    let mut rows = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut row = vec![zero(); m];
        for j in 0..n {
            row[j] = if i == j { a.get(i, i).clone() } else { -a.get(i, j).clone() };
        }
        row[n + i] = -one();
        rows.push(row);
        rhs.push(zero());
    }
    let mut sum = vec![zero(); m];
    for v in sum.iter_mut().take(n) {
        *v = one();
    }
    rows.push(sum);
    rhs.push(one());

    let vs = vertices(&rows, &rhs, m);
    let cover = max_support(&vs, m);
    if (0..n).any(|i| !cover.contains(i)) {
        return Ok(None);
    }
    let centre = barycentre(&vs, m).expect("nonempty vertex set");
    Ok(Some(primitive_integer(&centre[..n])))
}

/// Positive multiple of `v` with coprime integer entries.
pub fn primitive_integer(v: &[Rational]) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Whether `diag(d)·A·diag(d)` is diagonally dominant for this `d > 0`;
/// returns the first failing row otherwise.
pub fn check_dd_witness(a: &SymMatrix, d: &[Rational]) -> std::result::Result<(), usize> {
    if d.len() != a.n() {
        return Err(0);
    }
    for i in 0..a.n() {
        if !d[i].is_positive() {
            return Err(i);
        }
        let off = (0..a.n())
            .filter(|&j| j != i)
            .fold(zero(), |acc, j| acc + a.get(i, j).abs() * &d[j]);
        if a.get(i, i).abs() * &d[i] < off {
            return Err(i);
        }
    }
    Ok(())
}
