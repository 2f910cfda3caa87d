//! Plane-wave symbols of the decomposed equations of motion.
//!
//! For propagation along x₁ the twelve unknowns (u, P) split exactly into
//! a longitudinal triple (u₁, P^D, P^S), two identical transverse triples
//! (u_ξ, P_(1ξ), P_[1ξ]) and three scalar modes P_(23), P_[23], P^V.
//!
//! Substituting `e^{i(k x₁ − ω t)}` gives `ω² M x = K x` with `K` complex
//! Hermitian: the u ↔ P couplings carry a factor `i k`. Replacing the
//! displacement amplitude α by `i α` makes `K` real symmetric without
//! changing its spectrum, and scaling each degree of freedom by the square
//! root of its inertia turns the pencil into a standard eigenproblem
//! `K̂ v = ω² v` with `K̂ = M^{-1/2} K M^{-1/2}`.
//!
//! The inertias are the Frobenius weights of each component inside
//! `½ η ‖Ṗ‖²`: a longitudinal mode has `P = P^D diag(1, −½, −½) + P^S 𝟙`,
//! so `‖P‖² = 3/2 (P^D)² + 3 (P^S)²`; a transverse mode has
//! `P_1ξ = P_(1ξ) + P_[1ξ]`, `P_ξ1 = P_(1ξ) − P_[1ξ]`, so both weigh `2`.

pub mod cartan_lie;

use num_complex::Complex64;

use crate::eigen::{self, SymmetricEigen};
use crate::error::{Error, Result};
use crate::material::{MaterialParameters, ModelVariant};

pub use cartan_lie::{cartan_lie, CartanLieParts, Tensor3x3};

/// Wave family of a decoupled block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WaveFamily {
    /// DOFs (u₁, P^D, P^S).
    Longitudinal,
    /// DOFs (u_ξ, P_(1ξ), P_[1ξ]); ξ = 2 and ξ = 3 are identical.
    Transverse,
    /// P_(23).
    UncoupledShear,
    /// P_[23].
    UncoupledRotation,
    /// P^V = P₂₂ − P₃₃.
    UncoupledVolume,
}

impl WaveFamily {
    pub const ALL: [WaveFamily; 5] = [
        WaveFamily::Longitudinal,
        WaveFamily::Transverse,
        WaveFamily::UncoupledShear,
        WaveFamily::UncoupledRotation,
        WaveFamily::UncoupledVolume,
    ];
    pub const UNCOUPLED: [WaveFamily; 3] = [
        WaveFamily::UncoupledShear,
        WaveFamily::UncoupledRotation,
        WaveFamily::UncoupledVolume,
    ];

    pub fn group(self) -> FamilyGroup {
        match self {
            WaveFamily::Longitudinal => FamilyGroup::Longitudinal,
            WaveFamily::Transverse => FamilyGroup::Transverse,
            _ => FamilyGroup::Uncoupled,
        }
    }

    pub fn dofs(self) -> usize {
        match self {
            WaveFamily::Longitudinal | WaveFamily::Transverse => 3,
            _ => 1,
        }
    }

    /// Inertia of each degree of freedom.
    pub fn inertias(self, params: &MaterialParameters) -> Vec<f64> {
        let (rho, eta) = (params.rho, params.eta);
        match self {
            WaveFamily::Longitudinal => vec![rho, 1.5 * eta, 3.0 * eta],
            WaveFamily::Transverse => vec![rho, 2.0 * eta, 2.0 * eta],
            WaveFamily::UncoupledShear | WaveFamily::UncoupledRotation => vec![2.0 * eta],
            WaveFamily::UncoupledVolume => vec![0.5 * eta],
        }
    }
}

/// The three families a band gap can be scoped to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyGroup {
    Longitudinal,
    Transverse,
    Uncoupled,
}

impl FamilyGroup {
    pub const ALL: [FamilyGroup; 3] = [
        FamilyGroup::Longitudinal,
        FamilyGroup::Transverse,
        FamilyGroup::Uncoupled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyGroup::Longitudinal => "longitudinal",
            FamilyGroup::Transverse => "transverse",
            FamilyGroup::Uncoupled => "uncoupled",
        }
    }
}

impl std::fmt::Display for FamilyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Curvature energy in the form the symbol assembly consumes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curvature {
    /// `μ L_curl²/2 ‖Curl P‖² + μ L_div²/2 ‖Div P‖²`.
    CurlDiv { l_curl: f64, l_div: f64 },
    /// `μ L²/2 ‖∇P‖²`.
    FullGradient { l: f64 },
}

impl Curvature {
    pub fn of(variant: ModelVariant, params: &MaterialParameters) -> Self {
        match variant {
            ModelVariant::MindlinFullGradient => Curvature::FullGradient { l: params.l_c },
            _ => {
                let (l_curl, l_div) = variant.curvature_lengths(params);
                Curvature::CurlDiv { l_curl, l_div }
            }
        }
    }
}

/// Mass-normalized real symmetric symbol of one coupled family at one
/// wavenumber. Eigenpairs `(ω², v)` of `stiffness` are the plane waves.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolProblem<const N: usize> {
    pub family: WaveFamily,
    pub k: f64,
    /// rad²/s².
    pub stiffness: [[f64; N]; N],
    /// Inertia per DOF (kg/m³ for u, kg/m for P components).
    pub mass: [f64; N],
}

impl<const N: usize> SymbolProblem<N> {
    pub fn solve(&self) -> Result<SymmetricEigen<N>> {
        Ok(eigen::eigh(&self.stiffness)?)
    }

    /// Physical plane-wave amplitudes `(α-component, β-components…)` of a
    /// scaled eigenvector: undo the inertia scaling and the `α ↦ iα`
    /// substitution (coupled families only).
    pub fn physical_amplitudes(&self, v: &[f64; N]) -> [Complex64; N] {
        std::array::from_fn(|i| {
            let x = v[i] / self.mass[i].sqrt();
            if i == 0 && N > 1 {
                Complex64::new(0.0, x)
            } else {
                Complex64::new(x, 0.0)
            }
        })
    }
}

fn check_k(k: f64) -> Result<()> {
    if k.is_finite() && k >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidWavenumber(k))
    }
}

fn scale<const N: usize>(k_raw: [[f64; N]; N], mass: [f64; N]) -> [[f64; N]; N] {
    let root: [f64; N] = mass.map(f64::sqrt);
    std::array::from_fn(|i| std::array::from_fn(|j| k_raw[i][j] / (root[i] * root[j])))
}

pub fn longitudinal_symbol(
    k: f64,
    params: &MaterialParameters,
    variant: ModelVariant,
) -> Result<SymbolProblem<3>> {
    params.ensure_admissible()?;
    longitudinal_symbol_with(k, params, Curvature::of(variant, params))
}

pub fn longitudinal_symbol_with(
    k: f64,
    params: &MaterialParameters,
    curvature: Curvature,
) -> Result<SymbolProblem<3>> {
    check_k(k)?;
    let p = params;
    let k2 = k * k;
    let mass = [p.rho, 1.5 * p.eta, 3.0 * p.eta];

    let coupling_d = 2.0 * p.mu_e * k;
    let coupling_s = (3.0 * p.lambda_e + 2.0 * p.mu_e) * k;
    let mut raw = [
        [(p.lambda_e + 2.0 * p.mu_e) * k2, coupling_d, coupling_s],
        [coupling_d, 3.0 * (p.mu_e + p.mu_micro), 0.0],
        [
            coupling_s,
            0.0,
            3.0 * (2.0 * (p.mu_e + p.mu_micro) + 3.0 * (p.lambda_e + p.lambda_micro)),
        ],
    ];

    match curvature {
        Curvature::CurlDiv { l_curl, l_div } => {
            let curl = p.mu * l_curl * l_curl * k2;
            let div = p.mu * l_div * l_div * k2;
            raw[1][1] += 0.5 * curl + div;
            raw[1][2] += -curl + div;
            raw[2][1] += -curl + div;
            raw[2][2] += 2.0 * curl + div;
        }
        Curvature::FullGradient { l } => {
            let grad = p.mu * l * l * k2;
            raw[1][1] += 1.5 * grad;
            raw[2][2] += 3.0 * grad;
        }
    }

    Ok(SymbolProblem {
        family: WaveFamily::Longitudinal,
        k,
        stiffness: scale(raw, mass),
        mass,
    })
}

pub fn transverse_symbol(
    k: f64,
    params: &MaterialParameters,
    variant: ModelVariant,
) -> Result<SymbolProblem<3>> {
    params.ensure_admissible()?;
    transverse_symbol_with(k, params, Curvature::of(variant, params))
}

pub fn transverse_symbol_with(
    k: f64,
    params: &MaterialParameters,
    curvature: Curvature,
) -> Result<SymbolProblem<3>> {
    check_k(k)?;
    let p = params;
    let k2 = k * k;
    let mass = [p.rho, 2.0 * p.eta, 2.0 * p.eta];

    let coupling_sym = 2.0 * p.mu_e * k;
    let coupling_skew = -2.0 * p.mu_c * k;
    let mut raw = [
        [(p.mu_e + p.mu_c) * k2, coupling_sym, coupling_skew],
        [coupling_sym, 4.0 * (p.mu_e + p.mu_micro), 0.0],
        [coupling_skew, 0.0, 4.0 * p.mu_c],
    ];

    match curvature {
        Curvature::CurlDiv { l_curl, l_div } => {
            let curl = p.mu * l_curl * l_curl * k2;
            let div = p.mu * l_div * l_div * k2;
            raw[1][1] += curl + div;
            raw[1][2] += curl - div;
            raw[2][1] += curl - div;
            raw[2][2] += curl + div;
        }
        Curvature::FullGradient { l } => {
            let grad = p.mu * l * l * k2;
            raw[1][1] += 2.0 * grad;
            raw[2][2] += 2.0 * grad;
        }
    }

    Ok(SymbolProblem {
        family: WaveFamily::Transverse,
        k,
        stiffness: scale(raw, mass),
        mass,
    })
}

/// One-DOF symbol of an uncoupled scalar mode.
pub fn uncoupled_symbol(
    family: WaveFamily,
    k: f64,
    params: &MaterialParameters,
    variant: ModelVariant,
) -> Result<SymbolProblem<1>> {
    check_k(k)?;
    let p = params;
    // Only Curl P (or ∇P) reaches these components; Div P involves column 1 only.
    let grad = match Curvature::of(variant, p) {
        Curvature::CurlDiv { l_curl, .. } => p.mu * l_curl * l_curl,
        Curvature::FullGradient { l } => p.mu * l * l,
    };
    let (cutoff_stiffness, weight) = match family {
        WaveFamily::UncoupledShear => (2.0 * (p.mu_e + p.mu_micro), 2.0),
        WaveFamily::UncoupledRotation => (2.0 * p.mu_c, 2.0),
        WaveFamily::UncoupledVolume => (2.0 * (p.mu_e + p.mu_micro), 0.5),
        other => {
            return Err(Error::Numerical(format!(
                "{other:?} is not an uncoupled family"
            )))
        }
    };
    let mass = [weight * p.eta];
    let raw = weight * (cutoff_stiffness + grad * k * k);
    Ok(SymbolProblem {
        family,
        k,
        stiffness: [[raw / mass[0]]],
        mass,
    })
}

/// Angular frequencies of the P_(23), P_[23] and P^V modes.
pub fn uncoupled_dispersion(
    k: f64,
    params: &MaterialParameters,
    variant: ModelVariant,
) -> Result<[f64; 3]> {
    params.ensure_admissible()?;
    let mut out = [0.0; 3];
    for (slot, family) in out.iter_mut().zip(WaveFamily::UNCOUPLED) {
        *slot = uncoupled_symbol(family, k, params, variant)?.stiffness[0][0].sqrt();
    }
    Ok(out)
}
