//! Constitutive parameters, admissibility, characteristic quantities and
//! effective macroscopic moduli.
//!
//! All values are SI: stresses in Pa, lengths in m, `rho` in kg/m³ and the
//! micro-inertia `eta` in kg/m.

use std::fmt;

use crate::error::{Error, Result};

/// The ten scalar constants of the isotropic micromorphic energy and kinetic
/// density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParameters {
    pub mu_e: f64,
    pub lambda_e: f64,
    /// Cosserat couple modulus.
    pub mu_c: f64,
    pub mu_micro: f64,
    pub lambda_micro: f64,
    /// Shear modulus multiplying the curvature energy.
    pub mu: f64,
    /// Characteristic length of the Curl curvature term.
    pub l_c: f64,
    /// Characteristic length of the Div curvature term.
    pub l_d: f64,
    pub rho: f64,
    pub eta: f64,
}

impl MaterialParameters {
    /// Reference metamaterial used throughout the bundled scenarios.
    ///
    /// The reference set fixes neither the curvature modulus nor the Div
    /// length: `mu` is taken equal to `mu_e` and `l_d` equal to `l_c`.
    pub fn reference() -> Self {
        let mu_e = 200e6;
        Self {
            mu_e,
            lambda_e: 2.0 * mu_e,
            mu_c: 5.0 * mu_e,
            mu_micro: 100e6,
            lambda_micro: 100e6,
            mu: mu_e,
            l_c: 1e-3,
            l_d: 1e-3,
            rho: 2000.0,
            eta: 1e-2,
        }
    }

    pub fn with_mu_c(self, mu_c: f64) -> Self {
        Self { mu_c, ..self }
    }

    pub fn fields(&self) -> [(&'static str, f64); 10] {
        [
            ("mu_e", self.mu_e),
            ("lambda_e", self.lambda_e),
            ("mu_c", self.mu_c),
            ("mu_micro", self.mu_micro),
            ("lambda_micro", self.lambda_micro),
            ("mu", self.mu),
            ("L_c", self.l_c),
            ("L_d", self.l_d),
            ("rho", self.rho),
            ("eta", self.eta),
        ]
    }

    /// Checks every admissibility condition and reports all violations.
    pub fn validate(&self) -> AdmissibilityReport {
        use Condition::*;

        let mut violations = Vec::new();
        for (name, value) in self.fields() {
            if !value.is_finite() {
                violations.push(Finite(name));
            }
        }
        let checks = [
            (Rho, self.rho > 0.0),
            (Eta, self.eta > 0.0),
            (CurvatureModulus, self.mu > 0.0),
            (LengthCurl, self.l_c >= 0.0),
            (LengthDiv, self.l_d >= 0.0),
            (MuE, self.mu_e > 0.0),
            (MuC, self.mu_c >= 0.0),
            (BulkE, 3.0 * self.lambda_e + 2.0 * self.mu_e > 0.0),
            (MuMicro, self.mu_micro > 0.0),
            (
                BulkMicro,
                3.0 * self.lambda_micro + 2.0 * self.mu_micro > 0.0,
            ),
        ];
        violations.extend(checks.into_iter().filter(|(_, ok)| !ok).map(|(c, _)| c));

        AdmissibilityReport {
            violations,
            strictly_positive_curvature: self.mu * self.l_c * self.l_c > 0.0
                && self.mu * self.l_d * self.l_d > 0.0,
        }
    }

    pub fn ensure_admissible(&self) -> Result<()> {
        let report = self.validate();
        if report.is_ok() {
            Ok(())
        } else {
            Err(Error::Inadmissible(report.violations))
        }
    }

    /// Characteristic velocities and frequencies.
    pub fn derive(&self) -> Result<DerivedQuantities> {
        self.ensure_admissible()?;
        let p = self;
        let root = |num: f64, den: f64| (num / den).sqrt();
        Ok(DerivedQuantities {
            c_m: root(p.mu * p.l_c * p.l_c, p.eta),
            c_d: root(p.mu * p.l_d * p.l_d, p.eta),
            c_s: root(p.mu_e + p.mu_c, p.rho),
            c_p: root(p.lambda_e + 2.0 * p.mu_e, p.rho),
            omega_s: root(2.0 * (p.mu_e + p.mu_micro), p.eta),
            omega_p: root(
                2.0 * (p.mu_e + p.mu_micro) + 3.0 * (p.lambda_e + p.lambda_micro),
                p.eta,
            ),
            omega_r: root(2.0 * p.mu_c, p.eta),
            omega_l: root(p.lambda_micro + 2.0 * p.mu_micro, p.eta),
            omega_t: root(p.mu_micro, p.eta),
        })
    }

    /// Effective long-wavelength moduli from the macroscopic consistency
    /// condition: harmonic combinations of the shear and bulk-type moduli.
    pub fn macro_moduli(&self) -> Result<MacroModuli> {
        self.ensure_admissible()?;
        let shear_sum = self.mu_micro + self.mu_e;
        if shear_sum == 0.0 {
            return Err(Error::Numerical("mu_micro + mu_e vanishes".into()));
        }
        let mu_macro = self.mu_micro * self.mu_e / shear_sum;

        let bulk_micro = 2.0 * self.mu_micro + 3.0 * self.lambda_micro;
        let bulk_e = 2.0 * self.mu_e + 3.0 * self.lambda_e;
        let bulk_macro = bulk_micro * bulk_e / (bulk_micro + bulk_e);
        let lambda_macro = (bulk_macro - 2.0 * mu_macro) / 3.0;

        Ok(MacroModuli {
            mu_macro,
            lambda_macro,
            e_macro: mu_macro * (3.0 * lambda_macro + 2.0 * mu_macro) / (lambda_macro + mu_macro),
            nu_macro: lambda_macro / (2.0 * (lambda_macro + mu_macro)),
        })
    }
}

impl Default for MaterialParameters {
    fn default() -> Self {
        Self::reference()
    }
}

/// One failed admissibility condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    Finite(&'static str),
    Rho,
    Eta,
    CurvatureModulus,
    LengthCurl,
    LengthDiv,
    MuE,
    MuC,
    BulkE,
    MuMicro,
    BulkMicro,
}

impl Condition {
    /// Name of the parameter whose value decides the condition (the Lamé
    /// constant for the bulk conditions).
    pub fn field(&self) -> &'static str {
        match self {
            Condition::Finite(name) => name,
            Condition::Rho => "rho",
            Condition::Eta => "eta",
            Condition::CurvatureModulus => "mu",
            Condition::LengthCurl => "L_c",
            Condition::LengthDiv => "L_d",
            Condition::MuE => "mu_e",
            Condition::MuC => "mu_c",
            Condition::BulkE => "lambda_e",
            Condition::MuMicro => "mu_micro",
            Condition::BulkMicro => "lambda_micro",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Finite(name) => write!(f, "{name} finite"),
            Condition::Rho => f.write_str("rho > 0"),
            Condition::Eta => f.write_str("eta > 0"),
            Condition::CurvatureModulus => f.write_str("mu > 0"),
            Condition::LengthCurl => f.write_str("L_c >= 0"),
            Condition::LengthDiv => f.write_str("L_d >= 0"),
            Condition::MuE => f.write_str("mu_e > 0"),
            Condition::MuC => f.write_str("mu_c >= 0"),
            Condition::BulkE => f.write_str("3λ_e+2μ_e > 0"),
            Condition::MuMicro => f.write_str("mu_micro > 0"),
            Condition::BulkMicro => f.write_str("3λ_micro+2μ_micro > 0"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibilityReport {
    pub violations: Vec<Condition>,
    /// Whether both `mu·L_c²` and `mu·L_d²` are strictly positive. The Curl-only
    /// and Div-only models switch one of them off; that is admissible but
    /// reported here.
    pub strictly_positive_curvature: bool,
}

impl AdmissibilityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            f.write_str("ok")
        } else {
            let names: Vec<String> = self.violations.iter().map(|c| c.to_string()).collect();
            write!(f, "violated: {}", names.join(", "))
        }
    }
}

/// Characteristic speeds (m/s) and frequencies (rad/s).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedQuantities {
    pub c_m: f64,
    pub c_d: f64,
    pub c_s: f64,
    pub c_p: f64,
    pub omega_s: f64,
    pub omega_p: f64,
    pub omega_r: f64,
    pub omega_l: f64,
    pub omega_t: f64,
}

impl DerivedQuantities {
    pub fn entries(&self) -> [(&'static str, f64, &'static str); 9] {
        [
            ("c_m", self.c_m, "m/s"),
            ("c_d", self.c_d, "m/s"),
            ("c_s", self.c_s, "m/s"),
            ("c_p", self.c_p, "m/s"),
            ("omega_s", self.omega_s, "rad/s"),
            ("omega_p", self.omega_p, "rad/s"),
            ("omega_r", self.omega_r, "rad/s"),
            ("omega_l", self.omega_l, "rad/s"),
            ("omega_t", self.omega_t, "rad/s"),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MacroModuli {
    pub mu_macro: f64,
    pub lambda_macro: f64,
    pub e_macro: f64,
    pub nu_macro: f64,
}

/// Which curvature energy is switched on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelVariant {
    /// Curl P only (`L_d` ignored).
    RelaxedCurl,
    /// Div P only (`L_c` ignored).
    DivOnly,
    /// Curl P and Div P, both scaled by `L_c`.
    CurlDiv,
    /// Full gradient of P scaled by `L_c`.
    MindlinFullGradient,
}

impl ModelVariant {
    pub const ALL: [ModelVariant; 4] = [
        ModelVariant::RelaxedCurl,
        ModelVariant::DivOnly,
        ModelVariant::CurlDiv,
        ModelVariant::MindlinFullGradient,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelVariant::RelaxedCurl => "RelaxedCurl",
            ModelVariant::DivOnly => "DivOnly",
            ModelVariant::CurlDiv => "CurlDiv",
            ModelVariant::MindlinFullGradient => "MindlinFullGradient",
        }
    }

    /// Effective (Curl, Div) characteristic lengths seen by this variant.
    /// The full-gradient model is indistinguishable from Curl+Div at this
    /// level, since grad Div P − Curl Curl P = ΔP.
    pub fn curvature_lengths(self, params: &MaterialParameters) -> (f64, f64) {
        match self {
            ModelVariant::RelaxedCurl => (params.l_c, 0.0),
            ModelVariant::DivOnly => (0.0, params.l_d),
            ModelVariant::CurlDiv | ModelVariant::MindlinFullGradient => (params.l_c, params.l_c),
        }
    }

    /// Effective squared curvature speeds `(c_m², c_d²)`.
    pub fn curvature_speeds_sq(self, params: &MaterialParameters) -> (f64, f64) {
        let (l_curl, l_div) = self.curvature_lengths(params);
        (
            params.mu * l_curl * l_curl / params.eta,
            params.mu * l_div * l_div / params.eta,
        )
    }
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ModelVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "relaxedcurl" | "relaxed" | "curl" => Ok(ModelVariant::RelaxedCurl),
            "divonly" | "div" => Ok(ModelVariant::DivOnly),
            "curldiv" | "divcurl" => Ok(ModelVariant::CurlDiv),
            "mindlinfullgradient" | "mindlin" | "fullgradient" => {
                Ok(ModelVariant::MindlinFullGradient)
            }
            _ => Err(Error::UnknownVariant(s.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn reference_set_is_admissible() {
        let report = MaterialParameters::reference().validate();
        assert!(report.is_ok(), "{report}");
        assert!(report.strictly_positive_curvature);
    }

    #[test]
    fn zero_mu_e_is_rejected() {
        let p = MaterialParameters {
            mu_e: 0.0,
            ..MaterialParameters::reference()
        };
        let report = p.validate();
        assert!(report.violations.contains(&Condition::MuE));
        assert!(report.to_string().contains("mu_e > 0"));
    }

    #[test]
    fn negative_bulk_is_rejected() {
        let p = MaterialParameters {
            mu_e: 200e6,
            lambda_e: -200e6,
            ..MaterialParameters::reference()
        };
        assert_eq!(p.validate().violations, vec![Condition::BulkE]);
        assert!(p.derive().is_err());
    }

    #[test]
    fn vanishing_length_is_admissible_but_flagged() {
        let p = MaterialParameters {
            l_d: 0.0,
            ..MaterialParameters::reference()
        };
        let report = p.validate();
        assert!(report.is_ok());
        assert!(!report.strictly_positive_curvature);
    }

    #[test]
    fn reference_derived_quantities() {
        let d = MaterialParameters::reference().derive().unwrap();
        assert_relative_eq!(d.omega_r, (2e9f64 / 1e-2).sqrt(), max_relative = 1e-14);
        assert_relative_eq!(d.omega_r, 4.4721e5, max_relative = 1e-4);
        assert_relative_eq!(d.omega_l, 1.7321e5, max_relative = 1e-4);
        assert_relative_eq!(d.omega_t, 1.0000e5, max_relative = 1e-4);
        assert_relative_eq!(d.omega_s, 2.4495e5, max_relative = 1e-4);
        assert_relative_eq!(d.omega_p, 4.5826e5, max_relative = 1e-4);
        assert_relative_eq!(d.c_p, 632.46, max_relative = 1e-4);
        assert_relative_eq!(d.c_s, 774.60, max_relative = 1e-4);
        assert_relative_eq!(d.c_m, 2e4f64.sqrt(), max_relative = 1e-12);
        assert_relative_eq!(d.c_m, 141.42, max_relative = 1e-4);
    }

    #[test]
    fn no_couple_modulus_means_no_rotational_cutoff() {
        let d = MaterialParameters::reference()
            .with_mu_c(0.0)
            .derive()
            .unwrap();
        assert_eq!(d.omega_r, 0.0);
    }

    #[test]
    fn reference_macro_moduli() {
        let m = MaterialParameters::reference().macro_moduli().unwrap();
        assert_relative_eq!(m.mu_macro, 66.7e6, max_relative = 5e-3);
        assert_relative_eq!(m.lambda_macro, 82.5e6, max_relative = 5e-3);
        assert_relative_eq!(m.e_macro, 170e6, max_relative = 5e-3);
        assert_eq!(format!("{:.2}", m.nu_macro), "0.28");
    }

    #[test]
    fn rigid_micro_recovers_elastic_shear() {
        let p = MaterialParameters {
            mu_micro: 1e12,
            ..MaterialParameters::reference()
        };
        let m = p.macro_moduli().unwrap();
        assert_relative_eq!(m.mu_macro, p.mu_e, max_relative = 1e-3);
    }

    #[test]
    fn equal_shear_moduli_halve() {
        let p = MaterialParameters {
            mu_e: 100e6,
            mu_micro: 100e6,
            ..MaterialParameters::reference()
        };
        assert_relative_eq!(
            p.macro_moduli().unwrap().mu_macro,
            50e6,
            max_relative = 1e-15
        );
    }

    #[test]
    fn variant_names_parse() {
        for v in ModelVariant::ALL {
            assert_eq!(v.name().parse::<ModelVariant>().unwrap(), v);
        }
        assert_eq!(
            "curl-div".parse::<ModelVariant>().unwrap(),
            ModelVariant::CurlDiv
        );
        let err = "Foo".parse::<ModelVariant>().unwrap_err();
        assert!(err.to_string().contains("unknown variant"));
    }

    #[test]
    fn variant_curvature_pairs() {
        let p = MaterialParameters {
            l_d: 2e-3,
            ..MaterialParameters::reference()
        };
        assert_eq!(ModelVariant::RelaxedCurl.curvature_lengths(&p), (1e-3, 0.0));
        assert_eq!(ModelVariant::DivOnly.curvature_lengths(&p), (0.0, 2e-3));
        assert_eq!(ModelVariant::CurlDiv.curvature_lengths(&p), (1e-3, 1e-3));
        assert_eq!(
            ModelVariant::MindlinFullGradient.curvature_lengths(&p),
            ModelVariant::CurlDiv.curvature_lengths(&p)
        );
    }

    fn admissible() -> impl Strategy<Value = MaterialParameters> {
        (
            1e6..1e10f64,
            -0.6..3.0f64,
            0.0..1e10f64,
            1e6..1e10f64,
            -0.6..3.0f64,
            1e6..1e10f64,
            (0.0..1e-2f64, 0.0..1e-2f64),
            (100.0..1e4f64, 1e-4..1.0f64),
        )
            .prop_map(
                |(mu_e, le_ratio, mu_c, mu_micro, lm_ratio, mu, (l_c, l_d), (rho, eta))| {
                    MaterialParameters {
                        mu_e,
                        lambda_e: le_ratio * mu_e,
                        mu_c,
                        mu_micro,
                        lambda_micro: lm_ratio * mu_micro,
                        mu,
                        l_c,
                        l_d,
                        rho,
                        eta,
                    }
                },
            )
    }

    proptest! {
        #[test]
        fn derived_quantities_are_finite_and_nonnegative(p in admissible()) {
            let d = p.derive().unwrap();
            for (name, value, _) in d.entries() {
                prop_assert!(value.is_finite() && value >= 0.0, "{name} = {value}");
            }
            if p.lambda_e + p.lambda_micro >= 0.0 {
                prop_assert!(d.omega_p >= d.omega_s);
            }
        }

        #[test]
        fn macro_shear_is_below_both_constituents(p in admissible()) {
            let m = p.macro_moduli().unwrap();
            prop_assert!(m.mu_macro < p.mu_e && m.mu_macro < p.mu_micro);
            prop_assert!(m.nu_macro > -1.0 && m.nu_macro < 0.5);
        }

        #[test]
        fn macro_moduli_symmetric_in_micro_and_elastic(p in admissible()) {
            let swapped = MaterialParameters {
                mu_e: p.mu_micro,
                lambda_e: p.lambda_micro,
                mu_micro: p.mu_e,
                lambda_micro: p.lambda_e,
                ..p
            };
            let a = p.macro_moduli().unwrap();
            let b = swapped.macro_moduli().unwrap();
            prop_assert!((a.mu_macro - b.mu_macro).abs() <= 1e-12 * a.mu_macro);
            prop_assert!((a.lambda_macro - b.lambda_macro).abs() <= 1e-9 * a.mu_macro);
        }

        // Sample on both sides of each boundary; the report must flag exactly
        // the conditions whose defining inequality fails.
        #[test]
        fn validate_matches_defining_inequalities(
            p in admissible(),
            which in 0usize..7,
            offset in -1.0..1.0f64,
        ) {
            let mut q = p;
            let scale = 1e8;
            match which {
                0 => q.mu_e = offset * scale,
                1 => q.mu_c = offset * scale,
                2 => q.lambda_e = (-2.0 * q.mu_e + offset * scale) / 3.0,
                3 => q.mu_micro = offset * scale,
                4 => q.lambda_micro = (-2.0 * q.mu_micro + offset * scale) / 3.0,
                5 => q.l_c = offset * 1e-3,
                _ => q.eta = offset,
            }
            let expected_ok = q.mu_e > 0.0
                && q.mu_c >= 0.0
                && 3.0 * q.lambda_e + 2.0 * q.mu_e > 0.0
                && q.mu_micro > 0.0
                && 3.0 * q.lambda_micro + 2.0 * q.mu_micro > 0.0
                && q.l_c >= 0.0
                && q.l_d >= 0.0
                && q.eta > 0.0
                && q.rho > 0.0
                && q.mu > 0.0;
            prop_assert_eq!(q.validate().is_ok(), expected_ok);
        }
    }
}
