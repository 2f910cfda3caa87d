//! Orthogonal split of a 3×3 tensor into trace-free symmetric, skew and
//! spherical parts, with the scalar components used by the decomposed
//! plane-wave equations.

use std::ops::{Add, Mul, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Tensor3x3(pub [[f64; 3]; 3]);

impl Tensor3x3 {
    pub const ZERO: Tensor3x3 = Tensor3x3([[0.0; 3]; 3]);
    pub const IDENTITY: Tensor3x3 = Tensor3x3([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[i][j]
    }

    pub fn transpose(&self) -> Self {
        Tensor3x3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[j][i])
        }))
    }

    pub fn trace(&self) -> f64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn sym(&self) -> Self {
        (*self + self.transpose()) * 0.5
    }

    pub fn skew(&self) -> Self {
        (*self - self.transpose()) * 0.5
    }

    pub fn dev_sym(&self) -> Self {
        self.sym() - Self::IDENTITY * (self.trace() / 3.0)
    }

    /// Frobenius inner product.
    pub fn dot(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// `X^S`, one third of the trace.
    pub fn spherical(&self) -> f64 {
        self.trace() / 3.0
    }

    /// `X^D = X₁₁ − X^S`.
    pub fn dev_11(&self) -> f64 {
        self.0[0][0] - self.spherical()
    }

    /// `X_α^D = X_αα − X^S` (zero-based `alpha`).
    pub fn dev_diag(&self, alpha: usize) -> f64 {
        self.0[alpha][alpha] - self.spherical()
    }

    /// `X_(ij) = ½(X_ij + X_ji)`.
    pub fn sym_ij(&self, i: usize, j: usize) -> f64 {
        0.5 * (self.0[i][j] + self.0[j][i])
    }

    /// `X_[ij] = ½(X_ij − X_ji)`.
    pub fn skew_ij(&self, i: usize, j: usize) -> f64 {
        0.5 * (self.0[i][j] - self.0[j][i])
    }

    /// `X^V = X₂₂ − X₃₃`.
    pub fn volume_preserving(&self) -> f64 {
        self.0[1][1] - self.0[2][2]
    }
}

impl Add for Tensor3x3 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Tensor3x3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] + rhs.0[i][j])
        }))
    }
}

impl Sub for Tensor3x3 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Tensor3x3(std::array::from_fn(|i| {
            std::array::from_fn(|j| self.0[i][j] - rhs.0[i][j])
        }))
    }
}

impl Mul<f64> for Tensor3x3 {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Tensor3x3(self.0.map(|row| row.map(|x| x * s)))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartanLieParts {
    pub devsym: Tensor3x3,
    pub skew: Tensor3x3,
    pub spherical: f64,
}

impl CartanLieParts {
    pub fn reconstruct(&self) -> Tensor3x3 {
        self.devsym + self.skew + Tensor3x3::IDENTITY * self.spherical
    }
}

pub fn cartan_lie(x: &Tensor3x3) -> CartanLieParts {
    CartanLieParts {
        devsym: x.dev_sym(),
        skew: x.skew(),
        spherical: x.spherical(),
    }
}
