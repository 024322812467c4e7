//! Exact vertex enumeration for polytopes in standard form `{x ≥ 0 : Ax = b}`.
//!
//! A feasible point is a vertex iff the columns on its support are linearly
//! independent, so every vertex is found exactly once by solving `A_S x = b`
//! over supports `S` of size at most `rank A`. Intended for the small systems
//! (a dozen or so variables) that arise here.

use super::index_set::IndexSet;
use super::linalg::{rank, solve, LinearSolution};
use super::rational::{zero, Rational};
use num_traits::{Signed, Zero};

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub support: IndexSet,
    pub point: Vec<Rational>,
}

/// All vertices of `{x ∈ R^m : Ax = b, x ≥ 0}`, sorted by support.
pub fn vertices(a: &[Vec<Rational>], b: &[Rational], m: usize) -> Vec<Vertex> {
    assert!(m < 64, "too many variables for exhaustive vertex enumeration");
    assert_eq!(a.len(), b.len());
    let r = rank(a, m);
    let mut out = Vec::new();
    if b.iter().all(Zero::is_zero) {
        out.push(Vertex { support: IndexSet::empty(m), point: vec![zero(); m] });
        return out;
    }
    for bits in 1u64..(1u64 << m) {
        let k = bits.count_ones() as usize;
        if k > r {
            continue;
        }
        let support = IndexSet::from_bits(m, bits);
        let cols = support.positions();
        let sub: Vec<Vec<Rational>> = a
            .iter()
            .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
            .collect();
        if let LinearSolution::Unique(x) = solve(&sub, b, k) {
            if x.iter().all(Signed::is_positive) {
                let mut point = vec![zero(); m];
                for (&c, v) in cols.iter().zip(x) {
                    point[c] = v;
                }
                out.push(Vertex { support, point });
            }
        }
    }
    out.sort_by(|x, y| x.support.cmp(&y.support));
    out
}

/// Union of the vertex supports, i.e. the largest support of a feasible point.
pub fn max_support(vs: &[Vertex], m: usize) -> IndexSet {
    vs.iter().fold(IndexSet::empty(m), |acc, v| acc.union(&v.support))
}

/// Barycentre of the vertices: a feasible point whose support is [`max_support`].
pub fn barycentre(vs: &[Vertex], m: usize) -> Option<Vec<Rational>> {
    if vs.is_empty() {
        return None;
    }
    let count = Rational::from_integer(vs.len().into());
    let mut p = vec![zero(); m];
    for v in vs {
        for (acc, x) in p.iter_mut().zip(&v.point) {
            *acc += x;
        }
    }
    Some(p.into_iter().map(|x| x / &count).collect())
}
