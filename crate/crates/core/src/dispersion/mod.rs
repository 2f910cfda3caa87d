//! Wavenumber sweeps, branch bookkeeping, cut-offs and long-wave slopes.
//!
//! Coupled branches are paired across `k` by ascending frequency, so each
//! branch is a continuous function of `k` even where true modes cross.
//! Ordinals map to the usual nomenclature only at `k = 0`: longitudinal
//! LA/LO₁/LO₂, transverse TA/TO₁/TO₂, and the uncoupled TSO (P_(23)),
//! TRO (P_[23]) and TCVO (P^V) modes.

mod gaps;
pub mod grid;
mod verify;

use crate::eigen::frobenius_norm;
use crate::error::{Error, Result};
use crate::material::{MaterialParameters, ModelVariant};
use crate::symbol::{
    longitudinal_symbol, transverse_symbol, uncoupled_symbol, FamilyGroup, SymbolProblem,
    WaveFamily,
};

pub use gaps::{band_gaps, default_omega_max, GapInterval, GapScope};
pub use grid::{default_k_grid, default_k_max, k_grid, GridSpacing};
pub use verify::{raw_operator, verify_mode};

/// Eigenvalues below `-NEGATIVE_EIGEN_TOL·‖K‖` mean the model is not
/// positive semi-definite; smaller negatives are round-off and clamp to 0.
pub const NEGATIVE_EIGEN_TOL: f64 = 1e-8;
/// Acoustic branches have a cut-off below this fraction of the largest cut-off.
pub const ACOUSTIC_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    /// 1/m.
    pub k: f64,
    /// rad/s.
    pub omega: f64,
    /// Eigenvector in mass-scaled coordinates; length is the family's DOF count.
    pub mode: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BranchLabel {
    Acoustic,
    Optic { cutoff: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Asymptote {
    /// Still growing at `k_max`; `slope` is the secant over `[k_max/2, k_max]`.
    Unbounded { slope: f64 },
    /// Saturating; `limit` is estimated by `ω(k_max)`.
    Bounded { limit: f64 },
    /// Constant in `k`.
    Flat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    pub family: WaveFamily,
    /// Ordinal within the family group (ascending ω for coupled families;
    /// shear, rotation, volume for the uncoupled group).
    pub index: usize,
    pub samples: Vec<Sample>,
    pub label: BranchLabel,
    pub asymptote: Asymptote,
}

impl Branch {
    pub fn group(&self) -> FamilyGroup {
        self.family.group()
    }

    pub fn is_acoustic(&self) -> bool {
        self.label == BranchLabel::Acoustic
    }

    /// Conventional name of the branch at `k = 0`.
    pub fn name(&self) -> &'static str {
        match (self.family, self.index) {
            (WaveFamily::Longitudinal, 0) => "LA",
            (WaveFamily::Longitudinal, 1) => "LO1",
            (WaveFamily::Longitudinal, _) => "LO2",
            (WaveFamily::Transverse, 0) => "TA",
            (WaveFamily::Transverse, 1) => "TO1",
            (WaveFamily::Transverse, _) => "TO2",
            (WaveFamily::UncoupledShear, _) => "TSO",
            (WaveFamily::UncoupledRotation, _) => "TRO",
            (WaveFamily::UncoupledVolume, _) => "TCVO",
        }
    }

    pub fn omega_range(&self) -> (f64, f64) {
        self.samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
                (lo.min(s.omega), hi.max(s.omega))
            })
    }

    /// Linear interpolation of ω at `k` inside the sampled range.
    pub fn omega_at(&self, k: f64) -> f64 {
        let s = &self.samples;
        let i = s.partition_point(|x| x.k < k);
        if i == 0 {
            return s[0].omega;
        }
        if i == s.len() {
            return s[s.len() - 1].omega;
        }
        let (a, b) = (&s[i - 1], &s[i]);
        a.omega + (b.omega - a.omega) * (k - a.k) / (b.k - a.k)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DispersionData {
    pub variant: ModelVariant,
    pub params: MaterialParameters,
    /// Longitudinal (3), transverse (3), then uncoupled shear, rotation, volume.
    pub branches: Vec<Branch>,
    pub gaps: Vec<GapInterval>,
}

impl DispersionData {
    pub fn k_grid(&self) -> Vec<f64> {
        self.branches[0].samples.iter().map(|s| s.k).collect()
    }

    pub fn group(&self, group: FamilyGroup) -> impl Iterator<Item = &Branch> {
        self.branches.iter().filter(move |b| b.group() == group)
    }

    pub fn complete_gaps(&self) -> impl Iterator<Item = &GapInterval> {
        self.gaps.iter().filter(|g| g.scope == GapScope::Complete)
    }
}

/// Eigenfrequencies at `k = 0`: coupled families sorted ascending, the
/// uncoupled triple in (shear, rotation, volume) order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cutoffs {
    pub longitudinal: [f64; 3],
    pub transverse: [f64; 3],
    pub uncoupled: [f64; 3],
}

impl Cutoffs {
    pub fn of(&self, group: FamilyGroup) -> [f64; 3] {
        match group {
            FamilyGroup::Longitudinal => self.longitudinal,
            FamilyGroup::Transverse => self.transverse,
            FamilyGroup::Uncoupled => self.uncoupled,
        }
    }

    pub fn max(&self) -> f64 {
        self.longitudinal
            .iter()
            .chain(&self.transverse)
            .chain(&self.uncoupled)
            .fold(0.0, |m, &x| m.max(x))
    }
}

fn frequencies<const N: usize>(problem: &SymbolProblem<N>) -> Result<([f64; N], [[f64; N]; N])> {
    let e = problem.solve()?;
    let tolerance = NEGATIVE_EIGEN_TOL * frobenius_norm(&problem.stiffness);
    let mut omegas = [0.0; N];
    for (omega, &value) in omegas.iter_mut().zip(&e.eigenvalues) {
        if value < -tolerance {
            return Err(Error::NegativeEigenvalue {
                k: problem.k,
                value,
                tolerance,
            });
        }
        *omega = value.max(0.0).sqrt();
    }
    Ok((omegas, e.eigenvectors))
}

pub fn cutoffs(variant: ModelVariant, params: &MaterialParameters) -> Result<Cutoffs> {
    let (longitudinal, _) = frequencies(&longitudinal_symbol(0.0, params, variant)?)?;
    let (transverse, _) = frequencies(&transverse_symbol(0.0, params, variant)?)?;
    let mut uncoupled = [0.0; 3];
    for (slot, family) in uncoupled.iter_mut().zip(WaveFamily::UNCOUPLED) {
        *slot = frequencies(&uncoupled_symbol(family, 0.0, params, variant)?)?.0[0];
    }
    Ok(Cutoffs {
        longitudinal,
        transverse,
        uncoupled,
    })
}

fn validate_grid(k_grid: &[f64]) -> Result<()> {
    if k_grid.len() < 2 {
        return Err(Error::InvalidGrid(format!(
            "need at least 2 points, got {}",
            k_grid.len()
        )));
    }
    if let Some(&k) = k_grid.iter().find(|k| !(k.is_finite() && **k >= 0.0)) {
        return Err(Error::InvalidWavenumber(k));
    }
    if k_grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid(
            "wavenumbers must be strictly increasing".into(),
        ));
    }
    Ok(())
}

/// Solves every wave family at each grid wavenumber. The returned data has
/// no gaps yet; see [`band_gaps`] and [`analyze`].
pub fn sweep(
    variant: ModelVariant,
    params: &MaterialParameters,
    k_grid: &[f64],
) -> Result<DispersionData> {
    params.ensure_admissible()?;
    validate_grid(k_grid)?;
    let cut = cutoffs(variant, params)?;
    let acoustic_tol = ACOUSTIC_TOL * cut.max();

    let mut coupled: Vec<[Vec<Sample>; 3]> = vec![Default::default(), Default::default()];
    let mut scalar: [Vec<Sample>; 3] = Default::default();

    for &k in k_grid {
        let problems = [
            longitudinal_symbol(k, params, variant)?,
            transverse_symbol(k, params, variant)?,
        ];
        for (slots, problem) in coupled.iter_mut().zip(&problems) {
            let (omegas, vectors) = frequencies(problem)?;
            for (j, slot) in slots.iter_mut().enumerate() {
                slot.push(Sample {
                    k,
                    omega: omegas[j],
                    mode: (0..3).map(|i| vectors[i][j]).collect(),
                });
            }
        }
        for (slot, family) in scalar.iter_mut().zip(WaveFamily::UNCOUPLED) {
            let problem = uncoupled_symbol(family, k, params, variant)?;
            slot.push(Sample {
                k,
                omega: frequencies(&problem)?.0[0],
                mode: vec![1.0],
            });
        }
    }

    let label = |cutoff: f64| {
        if cutoff <= acoustic_tol {
            BranchLabel::Acoustic
        } else {
            BranchLabel::Optic { cutoff }
        }
    };

    let mut branches = Vec::with_capacity(9);
    for ((family, slots), cut_values) in [WaveFamily::Longitudinal, WaveFamily::Transverse]
        .into_iter()
        .zip(coupled)
        .zip([cut.longitudinal, cut.transverse])
    {
        for (index, (samples, cutoff)) in slots.into_iter().zip(cut_values).enumerate() {
            let asymptote = classify_asymptote(&samples);
            branches.push(Branch {
                family,
                index,
                samples,
                label: label(cutoff),
                asymptote,
            });
        }
    }
    for (index, ((family, samples), cutoff)) in WaveFamily::UNCOUPLED
        .into_iter()
        .zip(scalar)
        .zip(cut.uncoupled)
        .enumerate()
    {
        let asymptote = classify_asymptote(&samples);
        branches.push(Branch {
            family,
            index,
            samples,
            label: label(cutoff),
            asymptote,
        });
    }

    Ok(DispersionData {
        variant,
        params: *params,
        branches,
        gaps: Vec::new(),
    })
}

fn classify_asymptote(samples: &[Sample]) -> Asymptote {
    let first = samples[0].omega;
    let variation: f64 = samples
        .windows(2)
        .map(|w| (w[1].omega - w[0].omega).abs())
        .sum();
    if variation < 1e-9 * first {
        return Asymptote::Flat;
    }
    let last = &samples[samples.len() - 1];
    let half_k = 0.5 * last.k;
    let i = samples.partition_point(|s| s.k < half_k).max(1);
    let (a, b) = (&samples[i - 1], &samples[i.min(samples.len() - 1)]);
    let half = if b.k > a.k {
        a.omega + (b.omega - a.omega) * (half_k - a.k) / (b.k - a.k)
    } else {
        a.omega
    };
    if last.omega > 1.5 * half {
        Asymptote::Unbounded {
            slope: (last.omega - half) / (last.k - half_k),
        }
    } else {
        Asymptote::Bounded { limit: last.omega }
    }
}

/// Default sweep and gap scan: 400 log-biased points up to
/// [`default_k_max`] and gaps below [`default_omega_max`].
pub fn analyze(variant: ModelVariant, params: &MaterialParameters) -> Result<DispersionData> {
    let mut data = sweep(variant, params, &default_k_grid(variant, params))?;
    let omega_max = default_omega_max(params)?;
    data.gaps = band_gaps(&mut data, omega_max)?;
    Ok(data)
}

/// Long-wave phase speeds (longitudinal, transverse) of the acoustic
/// branches, in m/s.
///
/// Uses `ω(k)/k` at `k₀` and `k₀/2` and removes the `O(k²)` dispersive term
/// by Richardson extrapolation. `k₀` is chosen so that `ω(k₀)` is three
/// decades below the lowest optic cut-off.
pub fn acoustic_slopes(variant: ModelVariant, params: &MaterialParameters) -> Result<(f64, f64)> {
    let d = params.derive()?;
    let cut = cutoffs(variant, params)?;
    let lowest_optic = cut
        .longitudinal
        .iter()
        .chain(&cut.transverse)
        .copied()
        .filter(|&w| w > ACOUSTIC_TOL * cut.max())
        .fold(f64::INFINITY, f64::min);
    let fastest = [d.c_p, d.c_s, d.c_m, d.c_d].into_iter().fold(0.0, f64::max);
    let k0 = 1e-3 * lowest_optic / fastest;

    let speed = |family: WaveFamily, k: f64| -> Result<f64> {
        let problem = match family {
            WaveFamily::Longitudinal => longitudinal_symbol(k, params, variant)?,
            _ => transverse_symbol(k, params, variant)?,
        };
        let (omegas, vectors) = frequencies(&problem)?;
        // Among the modes that vanish at k = 0, the acoustic one carries the
        // displacement.
        let acoustic = (0..3)
            .filter(|&j| omegas[j] < 0.5 * lowest_optic)
            .max_by(|&a, &b| vectors[0][a].abs().total_cmp(&vectors[0][b].abs()))
            .ok_or_else(|| Error::Numerical("no acoustic branch found".into()))?;
        Ok(omegas[acoustic] / k)
    };

    let richardson = |family| -> Result<f64> {
        let coarse = speed(family, k0)?;
        let fine = speed(family, 0.5 * k0)?;
        Ok((4.0 * fine - coarse) / 3.0)
    };
    Ok((
        richardson(WaveFamily::Longitudinal)?,
        richardson(WaveFamily::Transverse)?,
    ))
}
