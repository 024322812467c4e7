//! Diagonal congruence to unit diagonal, carried in squared-scale form.
//!
//! Scaling `A` to `DAD` with `d_i = 1/√a_ii` introduces square roots. Each
//! scaled entry is stored as a [`Surd`] `c·√r` with rational `c` and `r`, so
//! products of two scaled entries and the inverse scaling stay exact.

use super::graph::LabeledGraph;
use super::rational::{exact_sqrt, fmt_rational, one, Rational};
use super::sym_matrix::SymMatrix;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The real number `coeff · √radicand` with `radicand > 0`.
#[derive(Clone, Debug)]
pub struct Surd {
    pub coeff: Rational,
    pub radicand: Rational,
}

impl Surd {
    pub fn rational(q: Rational) -> Self {
        Surd { coeff: q, radicand: one() }
    }

    /// `√q` for a positive rational `q`.
    pub fn sqrt(q: Rational) -> Self {
        assert!(q.is_positive(), "square root of a non-positive rational");
        Surd { coeff: one(), radicand: q }.normalized()
    }

    fn normalized(self) -> Self {
        if self.coeff.is_zero() {
            return Surd { coeff: self.coeff, radicand: one() };
        }
        match exact_sqrt(&self.radicand) {
            Some(s) => Surd { coeff: self.coeff * s, radicand: one() },
            None => self,
        }
    }

    pub fn mul(&self, other: &Surd) -> Surd {
        Surd { coeff: &self.coeff * &other.coeff, radicand: &self.radicand * &other.radicand }
            .normalized()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeff.is_zero() {
            return Some(self.coeff.clone());
        }
        exact_sqrt(&self.radicand).map(|s| &self.coeff * s)
    }

    /// Exact square of the value.
    pub fn square(&self) -> Rational {
        &self.coeff * &self.coeff * &self.radicand
    }

    pub fn signum(&self) -> i8 {
        if self.coeff.is_positive() {
            1
        } else if self.coeff.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn to_f64(&self) -> f64 {
        super::rational::to_f64(&self.coeff) * super::rational::to_f64(&self.radicand).sqrt()
    }
}

impl PartialEq for Surd {
    fn eq(&self, other: &Self) -> bool {
        self.signum() == other.signum() && self.square() == other.square()
    }
}

impl Eq for Surd {}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(q) => write!(f, "{}", fmt_rational(&q)),
            None if self.coeff.is_one() => write!(f, "√({})", fmt_rational(&self.radicand)),
            None => write!(f, "{}·√({})", fmt_rational(&self.coeff), fmt_rational(&self.radicand)),
        }
    }
}

/// Symmetric matrix whose entries are surds.
#[derive(Clone, Debug, PartialEq)]
pub struct SurdMatrix {
    n: usize,
    data: Vec<Surd>,
}

impl SurdMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Surd {
        &self.data[i * self.n + j]
    }

    /// The matrix over the rationals, when every entry is rational.
    pub fn to_rational(&self) -> Option<SymMatrix> {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_rational()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        SymMatrix::from_rows(rows).ok()
    }

    /// `G_{-1}`: edges where the entry equals `-1` exactly.
    pub fn graph_minus_one(&self) -> LabeledGraph {
        let minus_one = Surd::rational(-one());
        let mut g = LabeledGraph::numbered(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) == &minus_one {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// `B = DAD` with unit diagonal, together with `D`.
#[derive(Clone, Debug)]
pub struct UnitDiagonalScaling {
    /// Diagonal of `D`, `d_i = 1/√a_ii`.
    pub scale: Vec<Surd>,
    pub scaled: SurdMatrix,
}

impl UnitDiagonalScaling {
    /// Squares `d_i² = 1/a_ii`, all rational.
    pub fn scale_squares(&self) -> Vec<Rational> {
        self.scale.iter().map(Surd::square).collect()
    }

    /// Applies `D⁻¹ B D⁻¹`; the result is exactly the original matrix.
    pub fn unscale(&self) -> Result<SymMatrix> {
        let n = self.scaled.n();
        let inv: Vec<Surd> = self
            .scale_squares()
            .into_iter()
            .map(|s| Surd::sqrt(one() / s))
            .collect();
        let mut rows = vec![Vec::with_capacity(n); n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..n {
                let v = self.scaled.get(i, j).mul(&inv[i]).mul(&inv[j]);
                row.push(v.to_rational().ok_or_else(|| {
                    Error::PreconditionViolated(format!("entry ({i},{j}) did not unscale to a rational"))
                })?);
            }
        }
        SymMatrix::from_rows(rows)
    }
}

/// Scales a matrix with positive diagonal into its orbit representative with
/// unit diagonal: `b_ij = a_ij / √(a_ii a_jj)`.
pub fn unit_diagonal_scale(a: &SymMatrix) -> Result<UnitDiagonalScaling> {
    let n = a.n();
    for i in 0..n {
        if !a.get(i, i).is_positive() {
            return Err(Error::NonPositiveDiagonal(i));
        }
    }
    let scale: Vec<Surd> = (0..n).map(|i| Surd::sqrt(one() / a.get(i, i))).collect();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let entry = if i == j {
                Surd::rational(one())
            } else {
                Surd::rational(a.get(i, j).clone()).mul(&scale[i]).mul(&scale[j])
            };
            data.push(entry);
        }
    }
    Ok(UnitDiagonalScaling { scale, scaled: SurdMatrix { n, data } })
}
