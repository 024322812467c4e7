//! Orthogonal witnesses for nearly positive 3-column matrices.
//!
//! Steepest ascent of a soft minimum of the entries of `YQᵀ` over rotations,
//! starting at the identity. Rows of `Q` are rotated together, and the
//! derivative of `y_i·q_k` along the rotation vector `ω` is `q_k × y_i`.

use crate::error::{Error, Result};
use crate::matrix_core::rational::{to_f64, Rational};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Mat3 = [[f64; 3]; 3];

const MAX_STEPS: usize = 20_000;
const RESTARTS: usize = 8;
const SOFTMIN_SHARPNESS: f64 = 200.0;

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn min_entry(y: &Mat3, q: &Mat3) -> f64 {
    let mut m = f64::INFINITY;
    for yi in y {
        for qk in q {
            m = m.min(dot(yi, qk));
        }
    }
    m
}

/// Rodrigues rotation of every row of `q` about `omega`.
fn rotate(q: &Mat3, omega: &[f64; 3]) -> Mat3 {
    let theta = dot(omega, omega).sqrt();
    if theta == 0.0 {
        return *q;
    }
    let axis = [omega[0] / theta, omega[1] / theta, omega[2] / theta];
    let (s, c) = theta.sin_cos();
    let mut out = *q;
    for (row, v) in out.iter_mut().zip(q) {
        let kxv = cross(&axis, v);
        let kv = dot(&axis, v);
        for t in 0..3 {
            row[t] = v[t] * c + kxv[t] * s + axis[t] * kv * (1.0 - c);
        }
    }
    out
}

fn orthonormalize(q: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for k in 0..3 {
        let mut v = q[k];
        for j in 0..k {
            let p = dot(&v, &out[j]);
            for t in 0..3 {
                v[t] -= p * out[j][t];
            }
        }
        let norm = dot(&v, &v).sqrt();
        for t in 0..3 {
            out[k][t] = v[t] / norm;
        }
    }
    out
}

/// `max |QQᵀ − I|`.
pub fn orthogonality_defect(q: &Mat3) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((dot(&q[i], &q[j]) - target).abs());
        }
    }
    worst
}

fn ascent(y: &Mat3, start: Mat3, epsilon: f64) -> Mat3 {
    let mut q = start;
    let mut current = min_entry(y, &q);
    let mut step = 0.1;
    for _ in 0..MAX_STEPS {
        if current >= epsilon || step < 1e-12 {
            break;
        }
        let mut weights = [[0.0; 3]; 3];
        let mut total = 0.0;
        for (i, yi) in y.iter().enumerate() {
            for (k, qk) in q.iter().enumerate() {
                let w = (-SOFTMIN_SHARPNESS * (dot(yi, qk) - current)).exp();
                weights[i][k] = w;
                total += w;
            }
        }
        let mut grad = [0.0; 3];
        for (i, yi) in y.iter().enumerate() {
            for (k, qk) in q.iter().enumerate() {
                let g = cross(qk, yi);
                for t in 0..3 {
                    grad[t] += weights[i][k] / total * g[t];
                }
            }
        }
        let norm = dot(&grad, &grad).sqrt();
        if norm == 0.0 {
            break;
        }
        let omega = [grad[0] / norm * step, grad[1] / norm * step, grad[2] / norm * step];
        let candidate = rotate(&q, &omega);
        let value = min_entry(y, &candidate);
        if value > current {
            q = candidate;
            current = value;
            step *= 1.2;
        } else {
            step *= 0.5;
        }
    }
    orthonormalize(&q)
}

/// Finds an orthogonal `Q` with every entry of `YQᵀ` at least `epsilon`.
///
/// `Y` must be `3 × 3`, nonnegative, with `YYᵀ` entrywise positive. The search
/// is deterministic for a given `seed`, which only drives restarts.
pub fn nearly_positive_witness(y: &[Vec<Rational>], epsilon: f64, seed: u64) -> Result<Mat3> {
    if y.len() != 3 || y.iter().any(|r| r.len() != 3) {
        return Err(Error::PreconditionViolated("Y must be 3x3".into()));
    }
    if y.iter().flatten().any(Signed::is_negative) {
        return Err(Error::PreconditionViolated("Y must be nonnegative".into()));
    }
    for i in 0..3 {
        for j in 0..3 {
            let g: Rational = (0..3).map(|t| &y[i][t] * &y[j][t]).sum();
            if g.is_zero() {
                return Err(Error::PreconditionViolated(format!(
                    "(YY^T)[{},{}] is zero",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    if !(epsilon > 0.0) {
        return Err(Error::PreconditionViolated("epsilon must be positive".into()));
    }
    let yf: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| to_f64(&y[i][j])));
    let identity: Mat3 = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut start = identity;
    let mut best = identity;
    let mut best_value = f64::NEG_INFINITY;
    for attempt in 0..=RESTARTS {
        let q = ascent(&yf, start, epsilon);
        let value = min_entry(&yf, &q);
        if value > best_value {
            best = q;
            best_value = value;
        }
        if best_value >= epsilon {
            break;
        }
        let spread = 0.3 * (attempt + 1) as f64;
        let omega = [rng.gen_range(-spread..spread), rng.gen_range(-spread..spread), rng.gen_range(-spread..spread)];
        start = rotate(&best, &omega);
    }
    if best_value >= epsilon && orthogonality_defect(&best) <= 1e-12 {
        Ok(best)
    } else {
        Err(Error::WitnessNotFound(format!("best minimum entry {best_value:.3e} below {epsilon:.3e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix_core::rational::int;

    fn rows(v: [[i64; 3]; 3]) -> Vec<Vec<Rational>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn positive_y_keeps_identity() {
        let q = nearly_positive_witness(&rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]]), 0.5, 0).unwrap();
        assert_eq!(q, [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
    }

    #[test]
    fn cyclic_coefficient_matrix() {
        let y = rows([[1, 0, 1], [1, 1, 0], [0, 1, 1]]);
        let q = nearly_positive_witness(&y, 1e-3, 7).unwrap();
        let yf: Mat3 = std::array::from_fn(|i| std::array::from_fn(|j| to_f64(&y[i][j])));
        assert!(min_entry(&yf, &q) >= 1e-3);
        assert!(orthogonality_defect(&q) <= 1e-12);
    }

    #[test]
    fn identity_rejected() {
        assert!(matches!(
            nearly_positive_witness(&rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 1e-3, 0),
            Err(Error::PreconditionViolated(_))
        ));
    }
}
