//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use cprank_core::cp_decomp::{CpTerm, WeightedCpDecomposition};
use cprank_core::matrix_core::rational::{rat, to_f64};
use cprank_core::{IndexSet, LabeledGraph, Rational, SymMatrix};
use num_traits::{Signed, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

pub fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

pub fn sym_matrix(n: usize) -> impl Strategy<Value = SymMatrix> {
    vec(small_rational(), n * (n + 1) / 2).prop_map(move |u| SymMatrix::from_upper(n, u).unwrap())
}

/// `Σ c cᵀ + N` with integer `c` and symmetric nonnegative `N`.
pub fn psd_plus_nonneg(n: usize) -> impl Strategy<Value = SymMatrix> {
    (vec(vec(-3i64..=3, n), 1..=n), vec(0i64..=3, n * (n + 1) / 2)).prop_map(move |(cols, upper)| {
        let mut a = SymMatrix::from_upper(n, upper.into_iter().map(|v| rat(v, 1)).collect()).unwrap();
        for c in cols {
            let c: Vec<Rational> = c.into_iter().map(|v| rat(v, 1)).collect();
            for i in 0..n {
                for j in i..n {
                    let v = a.get(i, j) + &c[i] * &c[j];
                    a.set(i, j, v);
                }
            }
        }
        a
    })
}

/// Copositive matrices with a known zero `x`: a sum of `c cᵀ` with `c ⊥ x`
/// plus a nonnegative matrix vanishing on `supp x × supp x`.
pub fn copositive_with_zero(n: usize) -> impl Strategy<Value = (SymMatrix, Vec<Rational>)> {
    (vec(0i64..=3, n), vec(vec(-3i64..=3, n), 1..n), vec(0i64..=2, n * (n + 1) / 2)).prop_filter_map(
        "zero vector needs a positive entry",
        move |(x, cols, upper)| {
            if x.iter().all(|&v| v == 0) {
                return None;
            }
            let x: Vec<Rational> = x.into_iter().map(|v| rat(v, 1)).collect();
            let xx: Rational = x.iter().map(|v| v * v).sum();
            let mut a = SymMatrix::zeros(n);
            let mut k = 0;
            for i in 0..n {
                for j in i..n {
                    let inside = !x[i].is_zero() && !x[j].is_zero();
                    if !inside {
                        a.set(i, j, rat(upper[k], 1));
                    }
                    k += 1;
                }
            }
            for c in cols {
                let c: Vec<Rational> = c.into_iter().map(|v| rat(v, 1)).collect();
                let cx: Rational = c.iter().zip(&x).map(|(a, b)| a * b).sum();
                let p: Vec<Rational> = c.iter().zip(&x).map(|(ci, xi)| ci - &cx / &xx * xi).collect();
                for i in 0..n {
                    for j in i..n {
                        let v = a.get(i, j) + &p[i] * &p[j];
                        a.set(i, j, v);
                    }
                }
            }
            Some((a, x))
        },
    )
}

fn nonneg_vector(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    vec(0i64..=3, n)
        .prop_filter("nonzero", |v| v.iter().any(|&x| x > 0))
        .prop_map(|v| v.into_iter().map(|x| rat(x, 1)).collect())
}

/// `(b, d)` with `supp b ⊆ supp d` and positive weights.
pub fn nested_pair(n: usize) -> impl Strategy<Value = (CpTerm, CpTerm)> {
    (nonneg_vector(n), vec(0i64..=3, n), positive_rational(), positive_rational()).prop_filter_map(
        "b must be nonzero",
        |(d, b, wb, wd)| {
            let b: Vec<Rational> =
                b.iter().zip(&d).map(|(&bi, di)| if di.is_zero() { rat(0, 1) } else { rat(bi, 1) }).collect();
            if b.iter().all(Zero::is_zero) {
                return None;
            }
            Some((CpTerm::new(b, wb), CpTerm::new(d, wd)))
        },
    )
}

/// Decompositions whose supports are drawn from a few patterns, so that repeats are common.
pub fn decomposition(n: usize) -> impl Strategy<Value = WeightedCpDecomposition> {
    vec((0u32..4, vec(1i64..=3, n), positive_rational()), 1..7).prop_map(move |terms| {
        let masks = [0b11u32, 0b111, 0b1101, 0b1];
        let terms = terms
            .into_iter()
            .map(|(m, vals, w)| {
                let mask = masks[m as usize] & ((1 << n) - 1);
                let mask = if mask == 0 { 1 } else { mask };
                let v = (0..n).map(|i| if mask >> i & 1 == 1 { rat(vals[i], 1) } else { rat(0, 1) }).collect();
                CpTerm::new(v, w)
            })
            .collect();
        WeightedCpDecomposition::new(n, terms).unwrap()
    })
}

/// `Σ λ b bᵀ` with every `|supp b| ≤ 2`.
pub fn pair_supported(n: usize) -> impl Strategy<Value = WeightedCpDecomposition> {
    vec((0..n, 0..n, 1i64..=4, 1i64..=4, positive_rational()), 1..10).prop_map(move |terms| {
        let terms = terms
            .into_iter()
            .map(|(i, j, a, b, w)| {
                let mut v = vec![rat(0, 1); n];
                v[i] = rat(a, 1);
                if j != i {
                    v[j] = rat(b, 1);
                }
                CpTerm::new(v, w)
            })
            .collect();
        WeightedCpDecomposition::new(n, terms).unwrap()
    })
}

/// Determinant by fraction-keeping Gaussian elimination.
pub fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = rat(1, 1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return rat(0, 1) };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &m[c][k] * &f;
                m[r][k] -= v;
            }
        }
    }
    d
}

/// PSD iff every principal minor is nonnegative.
pub fn psd_by_minors(a: &SymMatrix) -> bool {
    let n = a.n();
    (1u64..1 << n).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let sub: Vec<Vec<Rational>> = idx.iter().map(|&i| idx.iter().map(|&j| a.get(i, j).clone()).collect()).collect();
        !det(sub).is_negative()
    })
}

fn quad(a: &[Vec<f64>], x: &[f64]) -> f64 {
    let n = x.len();
    (0..n).map(|i| (0..n).map(|j| a[i][j] * x[i] * x[j]).sum::<f64>()).sum()
}

fn project_simplex(y: &[f64]) -> Vec<f64> {
    let mut u = y.to_vec();
    u.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let mut css = 0.0;
    let mut theta = 0.0;
    for (k, &v) in u.iter().enumerate() {
        css += v;
        let t = (css - 1.0) / (k as f64 + 1.0);
        if v - t > 0.0 {
            theta = t;
        }
    }
    y.iter().map(|&v| (v - theta).max(0.0)).collect()
}

fn grid(n: usize, steps: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<f64>>) {
    if prefix.len() == n - 1 {
        let used: usize = prefix.iter().sum();
        let mut x: Vec<f64> = prefix.iter().map(|&k| k as f64 / steps as f64).collect();
        x.push((steps - used) as f64 / steps as f64);
        out.push(x);
        return;
    }
    let used: usize = prefix.iter().sum();
    for k in 0..=steps - used {
        prefix.push(k);
        grid(n, steps, prefix, out);
        prefix.pop();
    }
}

/// Minimum of `xᵀAx` on the simplex: dense grid, then projected gradient
/// descent from the best grid points and from every vertex and edge midpoint.
pub fn float_simplex_min(a: &SymMatrix) -> f64 {
    let n = a.n();
    let af: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| to_f64(a.get(i, j))).collect()).collect();
    let mut pts = Vec::new();
    grid(n, 24, &mut Vec::new(), &mut pts);
    pts.sort_by(|x, y| quad(&af, x).partial_cmp(&quad(&af, y)).unwrap());
    let mut starts: Vec<Vec<f64>> = pts.into_iter().take(12).collect();
    for i in 0..n {
        for j in i..n {
            let mut x = vec![0.0; n];
            x[i] += 0.5;
            x[j] += 0.5;
            starts.push(x);
        }
    }
    let lip: f64 = 2.0 * af.iter().flatten().map(|v| v * v).sum::<f64>().sqrt().max(1e-9);
    let mut best = f64::INFINITY;
    for mut x in starts {
        for _ in 0..4000 {
            let g: Vec<f64> = (0..n).map(|i| 2.0 * (0..n).map(|j| af[i][j] * x[j]).sum::<f64>()).collect();
            let y: Vec<f64> = x.iter().zip(&g).map(|(xi, gi)| xi - gi / lip).collect();
            x = project_simplex(&y);
        }
        // Finish on the face the descent settled on: an exact KKT solve in floats.
        best = best.min(quad(&af, &x)).min(face_polish(&af, &x));
    }
    best
}

fn face_polish(a: &[Vec<f64>], x: &[f64]) -> f64 {
    let s: Vec<usize> = (0..x.len()).filter(|&i| x[i] > 1e-9).collect();
    let k = s.len();
    // [A_s 1; 1ᵀ 0] [u; -λ] = [0; 1]
    let mut m = vec![vec![0.0; k + 2]; k + 1];
    for (r, &i) in s.iter().enumerate() {
        for (c, &j) in s.iter().enumerate() {
            m[r][c] = a[i][j];
        }
        m[r][k] = 1.0;
    }
    for c in 0..k {
        m[k][c] = 1.0;
    }
    m[k][k + 1] = 1.0;
    for c in 0..=k {
        let p = (c..=k).max_by(|&p, &q| m[p][c].abs().partial_cmp(&m[q][c].abs()).unwrap()).unwrap();
        if m[p][c].abs() < 1e-12 {
            return f64::INFINITY;
        }
        m.swap(p, c);
        for r in 0..=k {
            if r != c {
                let f = m[r][c] / m[c][c];
                for q in c..k + 2 {
                    m[r][q] -= f * m[c][q];
                }
            }
        }
    }
    let u: Vec<f64> = (0..k).map(|r| m[r][k + 1] / m[r][r]).collect();
    if u.iter().any(|&v| v < -1e-12) {
        return f64::INFINITY;
    }
    let mut full = vec![0.0; x.len()];
    for (r, &i) in s.iter().enumerate() {
        full[i] = u[r].max(0.0);
    }
    quad(a, &full)
}

/// Largest triangle-free edge subset by enumerating every subset.
pub fn brute_tf(g: &LabeledGraph) -> usize {
    let edges = g.edges();
    assert!(edges.len() <= 16, "brute force is for small graphs");
    let tri = g.triangles();
    let index = |u: usize, v: usize| edges.iter().position(|&e| e == (u.min(v), u.max(v))).unwrap();
    let masks: Vec<u32> =
        tri.iter().map(|&(a, b, c)| 1 << index(a, b) | 1 << index(a, c) | 1 << index(b, c)).collect();
    (0u32..1 << edges.len())
        .filter(|s| masks.iter().all(|t| s & t != *t))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn set(n: usize, labels: &[usize]) -> IndexSet {
    IndexSet::from_labels(n, labels)
}
