#![allow(dead_code)]

use micromorph_core::MaterialParameters;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    (rng.gen_range(lo.ln()..hi.ln())).exp()
}

/// Admissible parameters spread over several decades, including negative
/// Lamé constants allowed by the bulk conditions.
pub fn random_params(rng: &mut impl Rng) -> MaterialParameters {
    let mu_e = log_uniform(rng, 1e6, 1e10);
    let mu_micro = log_uniform(rng, 1e6, 1e10);
    MaterialParameters {
        mu_e,
        lambda_e: rng.gen_range(-0.66..3.0) * mu_e,
        mu_c: if rng.gen_bool(0.2) {
            0.0
        } else {
            log_uniform(rng, 1e5, 1e10)
        },
        mu_micro,
        lambda_micro: rng.gen_range(-0.66..3.0) * mu_micro,
        mu: log_uniform(rng, 1e6, 1e10),
        l_c: log_uniform(rng, 1e-5, 1e-1),
        l_d: log_uniform(rng, 1e-5, 1e-1),
        rho: log_uniform(rng, 100.0, 2e4),
        eta: log_uniform(rng, 1e-4, 1.0),
    }
}

pub fn random_k(rng: &mut impl Rng) -> f64 {
    if rng.gen_bool(0.1) {
        0.0
    } else {
        log_uniform(rng, 1e-2, 1e7)
    }
}
