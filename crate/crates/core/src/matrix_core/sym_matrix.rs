use super::index_set::IndexSet;
use super::rational::{fmt_rational, int, one, zero, Rational, RationalJson};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Symmetric `n×n` matrix over exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymMatrix {
    n: usize,
    data: Vec<Rational>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix { n, data: vec![zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = one();
        }
        m
    }

    /// The all-ones matrix `J_n`.
    pub fn ones(n: usize) -> Self {
        SymMatrix { n, data: vec![one(); n * n] }
    }

    /// `E_ij`: zero except for the `(i,j)` and `(j,i)` entries, which are 1 (0-based).
    pub fn unit_pair(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n);
        m.set(i, j, one());
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, v) in d.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            data.extend(row);
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(SymMatrix { n, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    /// Builds from the row-major upper triangle (including the diagonal).
    pub fn from_upper(n: usize, upper: Vec<Rational>) -> Result<Self> {
        let expected = n * (n + 1) / 2;
        if upper.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: upper.len() });
        }
        let mut m = Self::zeros(n);
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i..n {
                m.set(i, j, it.next().unwrap());
            }
        }
        Ok(m)
    }

    pub fn upper(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1) / 2);
        for i in 0..self.n {
            for j in i..self.n {
                out.push(self.get(i, j).clone());
            }
        }
        out
    }

    /// `Σ w_k v_k v_kᵀ`.
    pub fn from_outer_products<'a>(
        n: usize,
        terms: impl IntoIterator<Item = (&'a [Rational], &'a Rational)>,
    ) -> Self {
        let mut m = Self::zeros(n);
        for (v, w) in terms {
            assert_eq!(v.len(), n);
            for i in 0..n {
                if v[i].is_zero() {
                    continue;
                }
                let wi = w * &v[i];
                for j in i..n {
                    if !v[j].is_zero() {
                        let add = &wi * &v[j];
                        let cur = m.get(i, j) + add;
                        m.set(i, j, cur);
                    }
                }
            }
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }

    /// Sets both `(i,j)` and `(j,i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[j * self.n + i] = v.clone();
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diag(&self) -> Vec<Rational> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// Principal submatrix `A[α]`.
    pub fn principal(&self, alpha: &IndexSet) -> SymMatrix {
        let idx = alpha.positions();
        let k = idx.len();
        let mut m = Self::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate().skip(a) {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// `A(α)`: the principal submatrix on the complement of `α`.
    pub fn delete(&self, alpha: &IndexSet) -> SymMatrix {
        self.principal(&alpha.complement())
    }

    pub fn direct_sum(&self, other: &SymMatrix) -> SymMatrix {
        let n = self.n + other.n;
        let mut m = Self::zeros(n);
        for i in 0..self.n {
            for j in i..self.n {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.n {
            for j in i..other.n {
                m.set(self.n + i, self.n + j, other.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.n);
        (0..self.n)
            .map(|i| {
                let mut acc = zero();
                for (a, b) in self.row(i).iter().zip(x) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// `xᵀ A x`.
    pub fn quad_form(&self, x: &[Rational]) -> Rational {
        let ax = self.mul_vec(x);
        ax.iter().zip(x).fold(zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.n, other.n);
        SymMatrix {
            n: self.n,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SymMatrix {
        SymMatrix { n: self.n, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// `D A D` for a diagonal `D = diag(d)`.
    pub fn congruence(&self, d: &[Rational]) -> SymMatrix {
        assert_eq!(d.len(), self.n);
        let mut m = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                m.data[i * self.n + j] = &self.data[i * self.n + j] * &d[i] * &d[j];
            }
        }
        m
    }

    /// Simultaneous row/column permutation: `B[i][j] = A[p[i]][p[j]]`.
    pub fn permute(&self, p: &[usize]) -> SymMatrix {
        assert_eq!(p.len(), self.n);
        let mut m = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.data[i * self.n + j] = self.get(p[i], p[j]).clone();
            }
        }
        m
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|a| !a.is_negative())
    }

    pub fn first_negative(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j).is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.n)
            .map(|i| self.row(i).iter().map(fmt_rational).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymMatrix({})\n{}", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<RationalJson>,
}

impl Serialize for SymMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { n: self.n, entries: self.upper().into_iter().map(RationalJson).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(d)?;
        SymMatrix::from_upper(raw.n, raw.entries.into_iter().map(|r| r.0).collect())
            .map_err(serde::de::Error::custom)
    }
}
