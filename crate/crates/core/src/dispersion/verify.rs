//! Residual check of computed modes against the decomposed equations of
//! motion, assembled row by row in their original complex form.
//!
//! Each row is `ω² x_i = Σ_j A_ij x_j`, read directly off the component
//! equations with `∂₁ → i k` and `∂₁₁ → −k²`. Nothing here goes through the
//! symmetric, mass-scaled symbol, so agreement between the two is a real
//! consistency check.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::material::{MaterialParameters, ModelVariant};
use crate::symbol::WaveFamily;

type Row = Vec<Complex64>;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn im(x: f64) -> Complex64 {
    Complex64::new(0.0, x)
}

/// The operator `A(k)` of `ω² x = A x` for one family, in physical
/// amplitudes: (u₁, P^D, P^S), (u_ξ, P_(1ξ), P_[1ξ]) or the scalar mode.
pub fn raw_operator(
    variant: ModelVariant,
    params: &MaterialParameters,
    family: WaveFamily,
    k: f64,
) -> Result<Vec<Row>> {
    if !(k.is_finite() && k >= 0.0) {
        return Err(Error::InvalidWavenumber(k));
    }
    let p = params;
    let d = p.derive()?;
    let (cm2, cd2) = variant.curvature_speeds_sq(p);
    let full_gradient = variant == ModelVariant::MindlinFullGradient;
    let k2 = k * k;
    let (ws2, wp2, wr2) = (d.omega_s.powi(2), d.omega_p.powi(2), d.omega_r.powi(2));

    let rows = match family {
        WaveFamily::Longitudinal => {
            let mut a = vec![
                vec![
                    re(d.c_p.powi(2) * k2),
                    im(2.0 * p.mu_e / p.rho * k),
                    im((3.0 * p.lambda_e + 2.0 * p.mu_e) / p.rho * k),
                ],
                vec![im(-4.0 / 3.0 * p.mu_e / p.eta * k), re(ws2), re(0.0)],
                vec![
                    im(-(3.0 * p.lambda_e + 2.0 * p.mu_e) / (3.0 * p.eta) * k),
                    re(0.0),
                    re(wp2),
                ],
            ];
            if full_gradient {
                // ΔP acts on every component alike.
                a[1][1] += cm2 * k2;
                a[2][2] += cm2 * k2;
            } else {
                a[1][1] += (cm2 / 3.0 + 2.0 * cd2 / 3.0) * k2;
                a[1][2] += (-2.0 * cm2 / 3.0 + 2.0 * cd2 / 3.0) * k2;
                a[2][1] += (-cm2 / 3.0 + cd2 / 3.0) * k2;
                a[2][2] += (2.0 * cm2 / 3.0 + cd2 / 3.0) * k2;
            }
            a
        }
        WaveFamily::Transverse => {
            let mut a = vec![
                vec![
                    re(d.c_s.powi(2) * k2),
                    im(2.0 * p.mu_e / p.rho * k),
                    im(-p.eta / p.rho * wr2 * k),
                ],
                vec![im(-p.mu_e / p.eta * k), re(ws2), re(0.0)],
                vec![im(0.5 * wr2 * k), re(0.0), re(wr2)],
            ];
            if full_gradient {
                a[1][1] += cm2 * k2;
                a[2][2] += cm2 * k2;
            } else {
                a[1][1] += 0.5 * (cm2 + cd2) * k2;
                a[1][2] += 0.5 * (cm2 - cd2) * k2;
                a[2][1] += 0.5 * (cm2 - cd2) * k2;
                a[2][2] += 0.5 * (cm2 + cd2) * k2;
            }
            a
        }
        WaveFamily::UncoupledShear | WaveFamily::UncoupledVolume => {
            vec![vec![re(ws2 + cm2 * k2)]]
        }
        WaveFamily::UncoupledRotation => vec![vec![re(wr2 + cm2 * k2)]],
    };
    Ok(rows)
}

/// Relative residual of a mode from the sweep, measured in the kinetic
/// energy norm `‖y‖_M = ‖M^{1/2} y‖`:
/// `‖A x − ω² x‖_M / ((‖M^{1/2} A M^{-1/2}‖_F + ω²) ‖x‖_M)`.
///
/// The raw operator mixes displacement and micro-distortion rows with very
/// different magnitudes; the energy norm removes that imbalance. `eigvec` is
/// in the mass-scaled coordinates the sweep stores; it is mapped back to
/// physical amplitudes (inertia scaling undone, displacement multiplied by
/// `i`) before substitution.
pub fn verify_mode(
    variant: ModelVariant,
    params: &MaterialParameters,
    family: WaveFamily,
    k: f64,
    omega: f64,
    eigvec: &[f64],
) -> Result<f64> {
    let a = raw_operator(variant, params, family, k)?;
    let n = a.len();
    if eigvec.len() != n {
        return Err(Error::Numerical(format!(
            "{family:?} mode needs {n} components, got {}",
            eigvec.len()
        )));
    }
    let weight: Vec<f64> = family.inertias(params).iter().map(|m| m.sqrt()).collect();
    let x: Vec<Complex64> = eigvec
        .iter()
        .zip(&weight)
        .enumerate()
        .map(|(i, (&v, &w))| {
            if i == 0 && n > 1 {
                im(v / w)
            } else {
                re(v / w)
            }
        })
        .collect();

    let omega2 = omega * omega;
    let residual = (0..n)
        .map(|i| {
            let ax: Complex64 = (0..n).map(|j| a[i][j] * x[j]).sum();
            (weight[i] * (ax - x[i] * omega2)).norm_sqr()
        })
        .sum::<f64>()
        .sqrt();
    let a_norm = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| (a[i][j] * weight[i] / weight[j]).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let x_norm = x
        .iter()
        .zip(&weight)
        .map(|(z, w)| (z * w).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let scale = (a_norm + omega2) * x_norm;
    Ok(if scale > 0.0 {
        residual / scale
    } else {
        residual
    })
}
