use thiserror::Error;

use crate::material::Condition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("inadmissible material parameters: {}", join(.0))]
    Inadmissible(Vec<Condition>),

    #[error("unknown variant `{0}`")]
    UnknownVariant(String),

    #[error("invalid wavenumber {0} (must be finite and >= 0)")]
    InvalidWavenumber(f64),

    #[error("invalid wavenumber grid: {0}")]
    InvalidGrid(String),

    #[error(transparent)]
    Eigen(#[from] EigenError),

    #[error("negative eigenvalue {value:e} at k = {k:e} (tolerance {tolerance:e}); model is not positive semi-definite")]
    NegativeEigenvalue { k: f64, value: f64, tolerance: f64 },

    #[error("wavenumber range insufficient: branch still below omega_max = {omega_max:e} at k_max = {k_max:e}")]
    InsufficientRange { k_max: f64, omega_max: f64 },

    #[error("numerical failure: {0}")]
    Numerical(String),
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum EigenError {
    #[error("matrix dimension {0} outside 1..=8")]
    Dimension(usize),
    #[error("non-finite entry at ({0}, {1})")]
    NonFinite(usize, usize),
    #[error("matrix not symmetric at ({row}, {col}): relative asymmetry {asymmetry:e}")]
    Asymmetric {
        row: usize,
        col: usize,
        asymmetry: f64,
    },
    #[error("Jacobi sweeps did not converge")]
    NoConvergence,
}

fn join(conditions: &[Condition]) -> String {
    conditions
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
