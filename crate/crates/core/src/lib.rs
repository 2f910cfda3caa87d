//! Plane-wave dispersion relations and band gaps of isotropic micromorphic
//! continua with Curl, Div, Curl+Div or full-gradient curvature.
//!
//! ```
//! use micromorph_core::{analyze, MaterialParameters, ModelVariant};
//!
//! let data = analyze(ModelVariant::RelaxedCurl, &MaterialParameters::reference()).unwrap();
//! assert_eq!(data.complete_gaps().count(), 1);
//! ```

pub mod dispersion;
pub mod eigen;
mod error;
pub mod material;
pub mod symbol;

pub use dispersion::{
    acoustic_slopes, analyze, band_gaps, cutoffs, sweep, verify_mode, Asymptote, Branch,
    BranchLabel, Cutoffs, DispersionData, GapInterval, GapScope, Sample,
};
pub use eigen::{eigh, SymmetricEigen};
pub use error::{EigenError, Error, Result};
pub use material::{
    AdmissibilityReport, Condition, DerivedQuantities, MacroModuli, MaterialParameters,
    ModelVariant,
};
pub use symbol::{
    cartan_lie, longitudinal_symbol, transverse_symbol, uncoupled_dispersion, CartanLieParts,
    FamilyGroup, SymbolProblem, Tensor3x3, WaveFamily,
};
