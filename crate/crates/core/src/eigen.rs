//! Dense real symmetric eigensolver for very small matrices.
//!
//! Cyclic Jacobi: each rotation annihilates one off-diagonal pair and the
//! accumulated rotations form the eigenvector matrix. Sweeps stop once the
//! off-diagonal Frobenius norm drops below `1e-14·‖A‖_F`.

#![allow(clippy::needless_range_loop)] // index loops read closest to the matrix formulas

use crate::error::EigenError;

pub const MAX_DIM: usize = 8;
const SYMMETRY_TOL: f64 = 1e-12;
const OFF_DIAGONAL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition `A = V·diag(λ)·Vᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen<const N: usize> {
    /// Ascending.
    pub eigenvalues: [f64; N],
    /// Column `j` pairs with `eigenvalues[j]`. Within a degenerate eigenspace
    /// the basis is whatever the rotations produced.
    pub eigenvectors: [[f64; N]; N],
}

impl<const N: usize> SymmetricEigen<N> {
    pub fn eigenvector(&self, j: usize) -> [f64; N] {
        std::array::from_fn(|i| self.eigenvectors[i][j])
    }
}

pub fn frobenius_norm<const N: usize>(a: &[[f64; N]; N]) -> f64 {
    a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

/// Full spectrum of a symmetric matrix, `1 <= N <= 8`.
pub fn eigh<const N: usize>(a: &[[f64; N]; N]) -> Result<SymmetricEigen<N>, EigenError> {
    if N == 0 || N > MAX_DIM {
        return Err(EigenError::Dimension(N));
    }
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_finite() {
                return Err(EigenError::NonFinite(i, j));
            }
        }
    }
    let norm = frobenius_norm(a);
    let scale = if norm > 0.0 { norm } else { 1.0 };
    for i in 0..N {
        for j in (i + 1)..N {
            let asymmetry = (a[i][j] - a[j][i]).abs() / scale;
            if asymmetry > SYMMETRY_TOL {
                return Err(EigenError::Asymmetric {
                    row: i,
                    col: j,
                    asymmetry,
                });
            }
        }
    }

    let mut m: [[f64; N]; N] =
        std::array::from_fn(|i| std::array::from_fn(|j| 0.5 * (a[i][j] + a[j][i])));
    let mut v: [[f64; N]; N] =
        std::array::from_fn(|i| std::array::from_fn(|j| if i == j { 1.0 } else { 0.0 }));

    let threshold = OFF_DIAGONAL_TOL * norm;
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= threshold {
            converged = true;
            break;
        }
        for p in 0..N {
            for q in (p + 1)..N {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&m) > threshold {
        return Err(EigenError::NoConvergence);
    }

    let mut order: [usize; N] = std::array::from_fn(|i| i);
    order.sort_by(|&i, &j| m[i][i].total_cmp(&m[j][j]));

    let eigenvalues = std::array::from_fn(|j| m[order[j]][order[j]]);
    let mut eigenvectors = [[0.0; N]; N];
    for (j, &src) in order.iter().enumerate() {
        // Sign convention: the largest-magnitude component is positive.
        let pivot = (0..N).fold(0, |best, i| {
            if v[i][src].abs() > v[best][src].abs() {
                i
            } else {
                best
            }
        });
        let sign = if v[pivot][src] < 0.0 { -1.0 } else { 1.0 };
        for i in 0..N {
            eigenvectors[i][j] = sign * v[i][src];
        }
    }

    Ok(SymmetricEigen {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm<const N: usize>(m: &[[f64; N]; N]) -> f64 {
    let mut sum = 0.0;
    for i in 0..N {
        for j in 0..N {
            if i != j {
                sum += m[i][j] * m[i][j];
            }
        }
    }
    sum.sqrt()
}

fn rotate<const N: usize>(m: &mut [[f64; N]; N], v: &mut [[f64; N]; N], p: usize, q: usize) {
    let apq = m[p][q];
    if apq == 0.0 {
        return;
    }
    let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for row in m.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = c * kp - s * kq;
        row[q] = s * kp + c * kq;
    }
    for k in 0..N {
        let (pk, qk) = (m[p][k], m[q][k]);
        m[p][k] = c * pk - s * qk;
        m[q][k] = s * pk + c * qk;
    }
    m[p][q] = 0.0;
    m[q][p] = 0.0;

    for row in v.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = c * kp - s * kq;
        row[q] = s * kp + c * kq;
    }
}
