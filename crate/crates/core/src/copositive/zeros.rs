use super::simplex::minimum_value;
use crate::error::{Error, Result};
use crate::matrix_core::linalg::is_psd;
use crate::matrix_core::polytope::{barycentre, max_support, vertices, Vertex};
use crate::matrix_core::rational::{one, zero, Rational, RationalJson};
use crate::matrix_core::{IndexSet, SymMatrix};
use num_traits::{Signed, Zero as _};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// A nonzero `u ≥ 0` with `uᵀAu = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct Zero {
    pub vector: Vec<Rational>,
    pub support: IndexSet,
    pub minimal: bool,
}

impl Zero {
    fn new(vector: Vec<Rational>, minimal: bool) -> Self {
        let support = support_of(&vector);
        Zero { vector, support, minimal }
    }
}

impl Serialize for Zero {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<RationalJson> = self.vector.iter().cloned().map(RationalJson).collect();
        let mut st = s.serialize_struct("Zero", 3)?;
        st.serialize_field("vector", &v)?;
        st.serialize_field("support", &self.support)?;
        st.serialize_field("minimal", &self.minimal)?;
        st.end()
    }
}

fn support_of(v: &[Rational]) -> IndexSet {
    let pos: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    IndexSet::from_positions(v.len(), &pos)
}

/// The zero set of a copositive matrix, described through its supports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroAnalysis {
    pub n: usize,
    /// Every zero support, sorted.
    pub supports: Vec<IndexSet>,
    /// One witness per entry of `supports`, in the same order.
    pub witnesses: Vec<Zero>,
    /// Vertices of the normalised zero polytopes `{u ≥ 0 : A[σ]u = 0, Σu = 1}`.
    pub vertex_zeros: Vec<Zero>,
}

impl ZeroAnalysis {
    pub fn minimal_supports(&self) -> Vec<IndexSet> {
        self.witnesses.iter().filter(|z| z.minimal).map(|z| z.support).collect()
    }
}

/// Columns `w_1..w_k`: one minimal zero per minimal support, smallest nonzero
/// entry scaled to 1, ordered lexicographically by support.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MinimalZeroMatrix {
    pub n: usize,
    pub columns: Vec<Zero>,
}

impl MinimalZeroMatrix {
    pub fn k(&self) -> usize {
        self.columns.len()
    }

    pub fn supports(&self) -> Vec<IndexSet> {
        self.columns.iter().map(|z| z.support).collect()
    }

    /// `W` as an `n × k` row-major array.
    pub fn matrix(&self) -> Vec<Vec<Rational>> {
        (0..self.n)
            .map(|i| self.columns.iter().map(|z| z.vector[i].clone()).collect())
            .collect()
    }
}

struct FaceZeros {
    face: IndexSet,
    vertices: Vec<Vertex>,
    full: bool,
}

fn face_zero_polytope(a: &SymMatrix, face: &IndexSet) -> Option<FaceZeros> {
    let sub = a.principal(face);
    if !is_psd(&sub).psd {
        return None;
    }
    let k = face.len();
    let mut rows = sub.rows();
    rows.push(vec![one(); k]);
    let mut b = vec![zero(); k];
    b.push(one());
    let vertices = vertices(&rows, &b, k);
    if vertices.is_empty() {
        return None;
    }
    let full = max_support(&vertices, k) == IndexSet::full(k);
    Some(FaceZeros { face: *face, vertices, full })
}

fn embed(n: usize, face: &IndexSet, local: &[Rational]) -> Vec<Rational> {
    let mut v = vec![zero(); n];
    for (p, x) in face.iter().zip(local) {
        v[p] = x.clone();
    }
    v
}

fn mark_minimal(supports: &[IndexSet]) -> Vec<bool> {
    supports
        .iter()
        .map(|s| !supports.iter().any(|t| t.is_proper_subset(s)))
        .collect()
}

/// All zero supports of a copositive matrix, with witnesses.
pub fn zero_supports(a: &SymMatrix) -> Result<ZeroAnalysis> {
    let min = minimum_value(a)?;
    if min.is_negative() {
        return Err(Error::NotCopositive);
    }
    let n = a.n();
    if min.is_positive() {
        return Ok(ZeroAnalysis { n, supports: vec![], witnesses: vec![], vertex_zeros: vec![] });
    }
    if a.is_zero() {
        // Every nonnegative vector is a zero.
        let supports: Vec<IndexSet> = IndexSet::all_nonempty(n).collect();
        let witnesses = supports
            .iter()
            .map(|s| {
                let w = Rational::new(1.into(), (s.len() as i64).into());
                Zero::new(embed(n, s, &vec![w; s.len()]), s.len() == 1)
            })
            .collect();
        let vertex_zeros = (0..n)
            .map(|i| Zero::new(embed(n, &IndexSet::from_positions(n, &[i]), &[one()]), true))
            .collect();
        let mut out = ZeroAnalysis { n, supports, witnesses, vertex_zeros };
        sort_analysis(&mut out);
        return Ok(out);
    }

    let faces: Vec<FaceZeros> = IndexSet::all_nonempty(n)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter_map(|f| face_zero_polytope(a, &f))
        .collect();

    let mut supports = Vec::new();
    let mut points = Vec::new();
    let mut vertex_points: Vec<Vec<Rational>> = Vec::new();
    for fz in &faces {
        for v in &fz.vertices {
            vertex_points.push(embed(n, &fz.face, &v.point));
        }
        if fz.full {
            supports.push(fz.face);
            let b = barycentre(&fz.vertices, fz.face.len()).expect("nonempty polytope");
            points.push(embed(n, &fz.face, &b));
        }
    }
    let minimal = mark_minimal(&supports);
    let witnesses = points.into_iter().zip(minimal).map(|(p, m)| Zero::new(p, m)).collect();
    vertex_points.sort();
    vertex_points.dedup();
    let vertex_zeros: Vec<Zero> = vertex_points.into_iter().map(|p| Zero::new(p, false)).collect();
    let mut out = ZeroAnalysis { n, supports, witnesses, vertex_zeros };
    let minimal_set = out.minimal_supports();
    for z in &mut out.vertex_zeros {
        z.minimal = minimal_set.contains(&z.support);
    }
    sort_analysis(&mut out);
    Ok(out)
}

fn sort_analysis(z: &mut ZeroAnalysis) {
    let mut pairs: Vec<(IndexSet, Zero)> = z.supports.drain(..).zip(z.witnesses.drain(..)).collect();
    pairs.sort_by(|x, y| x.0.cmp(&y.0));
    for (s, w) in pairs {
        z.supports.push(s);
        z.witnesses.push(w);
    }
    z.vertex_zeros.sort_by(|x, y| x.support.cmp(&y.support).then_with(|| x.vector.cmp(&y.vector)));
}

/// Normalised minimal zeros of a copositive matrix.
pub fn minimal_zeros(a: &SymMatrix) -> Result<MinimalZeroMatrix> {
    let analysis = zero_supports(a)?;
    minimal_zeros_from(a, &analysis)
}

pub(crate) fn minimal_zeros_from(a: &SymMatrix, analysis: &ZeroAnalysis) -> Result<MinimalZeroMatrix> {
    let n = a.n();
    let mut columns = Vec::new();
    for s in analysis.minimal_supports() {
        let report = is_psd(&a.principal(&s));
        if report.nullspace.len() != 1 {
            return Err(Error::PreconditionViolated(format!(
                "minimal support {s} has kernel dimension {}",
                report.nullspace.len()
            )));
        }
        let mut v = report.nullspace[0].clone();
        if v.iter().any(Signed::is_negative) {
            v.iter_mut().for_each(|x| *x = -x.clone());
        }
        let m = v.iter().filter(|x| x.is_positive()).min().cloned().expect("nonzero kernel vector");
        let v: Vec<Rational> = v.iter().map(|x| x / &m).collect();
        columns.push(Zero::new(embed(n, &s, &v), true));
    }
    Ok(MinimalZeroMatrix { n, columns })
}
