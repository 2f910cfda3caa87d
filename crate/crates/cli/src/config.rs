//! Scenario files.
//!
//! A scenario is a small TOML document: a top-level `variant`, a mandatory
//! `[material]` table and optional `[sweep]` and `[output]` tables.
//!
//! ```toml
//! variant = "RelaxedCurl"
//!
//! [material]
//! mu_e = 200.0          # MPa
//! lambda_e = 400.0      # MPa
//! mu_c = 1000.0         # MPa
//! mu_micro = 100.0      # MPa
//! lambda_micro = 100.0  # MPa
//! mu = 200.0            # MPa, optional (defaults to mu_e)
//! L_c = 1.0             # mm
//! L_d = 1.0             # mm, optional (defaults to L_c)
//! rho = 2000.0          # kg/m³
//! eta = 0.01            # kg/m
//!
//! [sweep]
//! k_min = 0.0           # 1/m
//! k_max = 20000.0       # 1/m, optional (defaults to 20/L)
//! points = 400
//! spacing = "log-biased"  # or "linear"
//!
//! [output]
//! artifacts = ["csv", "svg", "gaps", "derived"]
//! ```
//!
//! Stresses are written in MPa and lengths in mm; [`ScenarioConfig`] keeps
//! the numbers as written so that rendering and re-parsing is lossless, and
//! converts to SI in [`MaterialConfig::to_parameters`].

use std::fmt;
use std::str::FromStr;

use micromorph_core::dispersion::grid::{default_k_max, GridSpacing, DEFAULT_POINTS};
use micromorph_core::{MaterialParameters, ModelVariant};
use serde::{Deserialize, Serialize};
use toml::Spanned;

const PA_PER_MPA: f64 = 1e6;
const M_PER_MM: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub variant: ModelVariant,
    pub material: MaterialConfig,
    pub sweep: SweepConfig,
    pub output: OutputConfig,
}

/// Material constants in file units: MPa, mm, kg/m³, kg/m.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MaterialConfig {
    pub mu_e: f64,
    pub lambda_e: f64,
    pub mu_c: f64,
    pub mu_micro: f64,
    pub lambda_micro: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<f64>,
    #[serde(rename = "L_c")]
    pub l_c: f64,
    #[serde(rename = "L_d", skip_serializing_if = "Option::is_none")]
    pub l_d: Option<f64>,
    pub rho: f64,
    pub eta: f64,
}

impl MaterialConfig {
    pub fn to_parameters(&self) -> MaterialParameters {
        MaterialParameters {
            mu_e: self.mu_e * PA_PER_MPA,
            lambda_e: self.lambda_e * PA_PER_MPA,
            mu_c: self.mu_c * PA_PER_MPA,
            mu_micro: self.mu_micro * PA_PER_MPA,
            lambda_micro: self.lambda_micro * PA_PER_MPA,
            mu: self.mu.unwrap_or(self.mu_e) * PA_PER_MPA,
            l_c: self.l_c * M_PER_MM,
            l_d: self.l_d.unwrap_or(self.l_c) * M_PER_MM,
            rho: self.rho,
            eta: self.eta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    /// 1/m.
    pub k_min: f64,
    /// 1/m; `None` selects the variant's default.
    pub k_max: Option<f64>,
    pub points: usize,
    pub spacing: GridSpacing,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            k_min: 0.0,
            k_max: None,
            points: DEFAULT_POINTS,
            spacing: GridSpacing::LogBiased,
        }
    }
}

impl SweepConfig {
    pub fn resolved_k_max(&self, variant: ModelVariant, params: &MaterialParameters) -> f64 {
        self.k_max.unwrap_or_else(|| default_k_max(variant, params))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Artifact {
    Csv,
    Svg,
    Gaps,
    Derived,
}

impl Artifact {
    pub const ALL: [Artifact; 4] = [
        Artifact::Csv,
        Artifact::Svg,
        Artifact::Gaps,
        Artifact::Derived,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Artifact::Csv => "csv",
            Artifact::Svg => "svg",
            Artifact::Gaps => "gaps",
            Artifact::Derived => "derived",
        }
    }

    /// File written for this artifact inside the output directory.
    pub fn file_name(self) -> &'static str {
        match self {
            Artifact::Csv => "dispersion.csv",
            Artifact::Svg => "dispersion.svg",
            Artifact::Gaps => "gaps.csv",
            Artifact::Derived => "derived.txt",
        }
    }
}

impl FromStr for Artifact {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Artifact::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown artifact `{s}` (expected csv, svg, gaps or derived)"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OutputConfig {
    pub artifacts: Vec<Artifact>,
}

impl Default for OutputConfig {
    fn default() -> Self {
        Self {
            artifacts: Artifact::ALL.to_vec(),
        }
    }
}

/// A problem in a scenario file, with its 1-based line when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub line: Option<usize>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// Every problem found in one scenario file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ConfigErrors(pub Vec<ConfigError>);

impl fmt::Display for ConfigErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&lines.join("\n"))
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    variant: Spanned<String>,
    material: RawMaterial,
    sweep: Option<RawSweep>,
    output: Option<RawOutput>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMaterial {
    mu_e: Spanned<f64>,
    lambda_e: Spanned<f64>,
    mu_c: Spanned<f64>,
    mu_micro: Spanned<f64>,
    lambda_micro: Spanned<f64>,
    mu: Option<Spanned<f64>>,
    #[serde(rename = "L_c")]
    l_c: Spanned<f64>,
    #[serde(rename = "L_d")]
    l_d: Option<Spanned<f64>>,
    rho: Spanned<f64>,
    eta: Spanned<f64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    k_min: Option<Spanned<f64>>,
    k_max: Option<Spanned<f64>>,
    points: Option<Spanned<i64>>,
    spacing: Option<Spanned<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    artifacts: Spanned<Vec<String>>,
}

struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn line(&self, offset: usize) -> usize {
        let end = offset.min(self.text.len());
        self.text.as_bytes()[..end]
            .iter()
            .filter(|&&b| b == b'\n')
            .count()
            + 1
    }

    fn error<T>(&self, value: &Spanned<T>, message: impl Into<String>) -> ConfigError {
        ConfigError {
            line: Some(self.line(value.span().start)),
            message: message.into(),
        }
    }
}

/// Parses and validates a scenario, collecting every error it can find.
pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigErrors> {
    let at = Locator { text };
    let raw: RawScenario = toml::from_str(text).map_err(|e| {
        ConfigErrors(vec![ConfigError {
            line: e.span().map(|s| at.line(s.start)),
            message: e.message().trim().to_string(),
        }])
    })?;

    let mut errors = Vec::new();
    let variant = match raw.variant.get_ref().parse::<ModelVariant>() {
        Ok(v) => Some(v),
        Err(e) => {
            errors.push(at.error(&raw.variant, e.to_string()));
            None
        }
    };

    let m = &raw.material;
    let material = MaterialConfig {
        mu_e: *m.mu_e.get_ref(),
        lambda_e: *m.lambda_e.get_ref(),
        mu_c: *m.mu_c.get_ref(),
        mu_micro: *m.mu_micro.get_ref(),
        lambda_micro: *m.lambda_micro.get_ref(),
        mu: m.mu.as_ref().map(|v| *v.get_ref()),
        l_c: *m.l_c.get_ref(),
        l_d: m.l_d.as_ref().map(|v| *v.get_ref()),
        rho: *m.rho.get_ref(),
        eta: *m.eta.get_ref(),
    };
    let field_span = |name: &str| -> &Spanned<f64> {
        match name {
            "mu_e" => &m.mu_e,
            "lambda_e" => &m.lambda_e,
            "mu_c" => &m.mu_c,
            "mu_micro" => &m.mu_micro,
            "lambda_micro" => &m.lambda_micro,
            "mu" => m.mu.as_ref().unwrap_or(&m.mu_e),
            "L_c" => &m.l_c,
            "L_d" => m.l_d.as_ref().unwrap_or(&m.l_c),
            "rho" => &m.rho,
            _ => &m.eta,
        }
    };
    let params = material.to_parameters();
    for condition in params.validate().violations {
        let defaulted = match condition.field() {
            "mu" if m.mu.is_none() => " (mu defaults to mu_e)",
            "L_d" if m.l_d.is_none() => " (L_d defaults to L_c)",
            _ => "",
        };
        errors.push(at.error(
            field_span(condition.field()),
            format!("inadmissible material: requires {condition}{defaulted}"),
        ));
    }

    let mut sweep = SweepConfig::default();
    if let Some(s) = &raw.sweep {
        if let Some(v) = &s.k_min {
            sweep.k_min = *v.get_ref();
            if !(sweep.k_min.is_finite() && sweep.k_min >= 0.0) {
                errors.push(at.error(v, "k_min must be finite and >= 0"));
            }
        }
        if let Some(v) = &s.k_max {
            sweep.k_max = Some(*v.get_ref());
            if !(v.get_ref().is_finite() && *v.get_ref() > sweep.k_min) {
                errors.push(at.error(v, "k_max must be finite and greater than k_min"));
            }
        }
        if let Some(v) = &s.points {
            match usize::try_from(*v.get_ref()) {
                Ok(n) if n >= 2 => sweep.points = n,
                _ => errors.push(at.error(v, "points must be at least 2")),
            }
        }
        if let Some(v) = &s.spacing {
            match v.get_ref().parse() {
                Ok(spacing) => sweep.spacing = spacing,
                Err(e) => errors.push(at.error(v, e)),
            }
        }
    }

    let mut output = OutputConfig::default();
    if let Some(o) = &raw.output {
        output.artifacts.clear();
        for name in o.artifacts.get_ref() {
            match name.parse::<Artifact>() {
                Ok(a) if !output.artifacts.contains(&a) => output.artifacts.push(a),
                Ok(a) => errors
                    .push(at.error(&o.artifacts, format!("duplicate artifact `{}`", a.name()))),
                Err(e) => errors.push(at.error(&o.artifacts, e)),
            }
        }
    }

    errors.sort_by_key(|e| e.line);
    match (variant, errors.is_empty()) {
        (Some(variant), true) => Ok(ScenarioConfig {
            variant,
            material,
            sweep,
            output,
        }),
        _ => Err(ConfigErrors(errors)),
    }
}

#[derive(Serialize)]
struct RenderScenario<'a> {
    variant: &'a str,
    material: &'a MaterialConfig,
    sweep: RenderSweep,
    output: RenderOutput,
}

#[derive(Serialize)]
struct RenderSweep {
    k_min: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_max: Option<f64>,
    points: u64,
    spacing: &'static str,
}

#[derive(Serialize)]
struct RenderOutput {
    artifacts: Vec<&'static str>,
}

/// Writes a scenario back in file form; `parse_config(&render(c)) == c`.
pub fn render(config: &ScenarioConfig) -> String {
    let doc = RenderScenario {
        variant: config.variant.name(),
        material: &config.material,
        sweep: RenderSweep {
            k_min: config.sweep.k_min,
            k_max: config.sweep.k_max,
            points: config.sweep.points as u64,
            spacing: config.sweep.spacing.name(),
        },
        output: RenderOutput {
            artifacts: config.output.artifacts.iter().map(|a| a.name()).collect(),
        },
    };
    toml::to_string(&doc).expect("scenario fields are always representable")
}
