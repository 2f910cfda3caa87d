use crate::material::{MaterialParameters, ModelVariant};

pub const DEFAULT_POINTS: usize = 400;
/// Ratio between the last and first nonzero spacing of the biased grid.
const LOG_BIAS: f64 = 1000.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridSpacing {
    Linear,
    #[default]
    LogBiased,
}

impl GridSpacing {
    pub fn name(self) -> &'static str {
        match self {
            GridSpacing::Linear => "linear",
            GridSpacing::LogBiased => "log-biased",
        }
    }
}

impl std::str::FromStr for GridSpacing {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "linear" => Ok(GridSpacing::Linear),
            "log-biased" | "log_biased" | "log" => Ok(GridSpacing::LogBiased),
            other => Err(format!(
                "unknown spacing `{other}` (expected linear or log-biased)"
            )),
        }
    }
}

/// `20 / L`, where `L` is the variant's Curl length, or its Div length when
/// the Curl term is off; `1e5` 1/m when neither is active.
pub fn default_k_max(variant: ModelVariant, params: &MaterialParameters) -> f64 {
    let (l_curl, l_div) = variant.curvature_lengths(params);
    if l_curl > 0.0 {
        20.0 / l_curl
    } else if l_div > 0.0 {
        20.0 / l_div
    } else {
        1e5
    }
}

/// `n` wavenumbers from `k_min` to `k_max` inclusive. The log-biased
/// spacing concentrates points near `k_min`, where acoustic slopes live.
pub fn k_grid(k_min: f64, k_max: f64, n: usize, spacing: GridSpacing) -> Vec<f64> {
    if n == 1 {
        return vec![k_min];
    }
    let span = k_max - k_min;
    let b = LOG_BIAS.ln();
    let denom = b.exp_m1();
    (0..n)
        .map(|i| {
            if i == n - 1 {
                return k_max;
            }
            let t = i as f64 / (n - 1) as f64;
            let f = match spacing {
                GridSpacing::Linear => t,
                GridSpacing::LogBiased => (b * t).exp_m1() / denom,
            };
            k_min + span * f
        })
        .collect()
}

pub fn default_k_grid(variant: ModelVariant, params: &MaterialParameters) -> Vec<f64> {
    k_grid(
        0.0,
        default_k_max(variant, params),
        DEFAULT_POINTS,
        GridSpacing::LogBiased,
    )
}
