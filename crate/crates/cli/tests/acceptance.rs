//! Acceptance criteria, one PASS/FAIL line each. Exits non-zero if any
//! criterion fails.

#![allow(clippy::needless_range_loop)]

use std::time::{Duration, Instant};

use micromorph_cli::app::analyze_scenario;
use micromorph_cli::{parse_config, scenarios};
use micromorph_core::dispersion::default_k_grid;
use micromorph_core::eigen::frobenius_norm;
use micromorph_core::{
    acoustic_slopes, analyze, cutoffs, eigh, longitudinal_symbol, sweep, transverse_symbol,
    verify_mode, FamilyGroup, GapScope, MaterialParameters, ModelVariant,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn relative(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs()
}

fn log_uniform(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo.ln()..hi.ln()).exp()
}

fn random_params(rng: &mut impl Rng) -> MaterialParameters {
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

fn scenario(name: &str) -> micromorph_core::DispersionData {
    let config = parse_config(scenarios::bundled(name).expect("bundled scenario")).expect("valid");
    analyze_scenario(&config).expect("analysis").0
}

fn macroscopic_consistency() -> Outcome {
    let m = MaterialParameters::reference().macro_moduli().unwrap();
    let checks = [
        ("mu_macro", m.mu_macro, 66.7e6),
        ("lambda_macro", m.lambda_macro, 82.5e6),
        ("E_macro", m.e_macro, 170e6),
        ("nu_macro", m.nu_macro, 0.28),
    ];
    let mut pass = true;
    let parts: Vec<String> = checks
        .iter()
        .map(|&(name, got, want)| {
            let r = relative(got, want);
            pass &= r <= 5e-3;
            format!(
                "{name}={got:.5e} ({:.2}% off{})",
                100.0 * r,
                if r <= 5e-3 { "" } else { ", >0.5%" }
            )
        })
        .collect();
    outcome(pass, parts.join("; "))
}

fn cutoff_reproduction() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut cases = vec![MaterialParameters::reference()];
    cases.extend((0..50).map(|_| random_params(&mut rng)));
    let mut worst = 0.0f64;
    for p in &cases {
        let d = p.derive().unwrap();
        let scale = d.omega_p.max(d.omega_r).max(d.omega_s);
        let sorted = |mut v: [f64; 3]| {
            v.sort_by(f64::total_cmp);
            v
        };
        for variant in ModelVariant::ALL {
            let c = cutoffs(variant, p).unwrap();
            let expected = [
                (c.longitudinal, sorted([0.0, d.omega_s, d.omega_p])),
                (c.transverse, sorted([0.0, d.omega_s, d.omega_r])),
                (c.uncoupled, [d.omega_s, d.omega_r, d.omega_s]),
            ];
            for (got, want) in expected {
                for (g, w) in got.iter().zip(want) {
                    let err = if w == 0.0 {
                        g.abs() / scale
                    } else {
                        relative(*g, w)
                    };
                    worst = worst.max(err);
                }
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-10 && elapsed < Duration::from_secs(1),
        format!(
            "{} materials x 4 variants, worst relative error {worst:.2e}, {elapsed:.2?}",
            cases.len()
        ),
    )
}

fn relaxed_complete_gap() -> Outcome {
    let start = Instant::now();
    let p = MaterialParameters::reference();
    let data = analyze(ModelVariant::RelaxedCurl, &p).unwrap();
    let elapsed = start.elapsed();
    let d = p.derive().unwrap();
    let (lo, hi) = (d.omega_l.max(d.omega_t), d.omega_r.min(d.omega_s));
    let complete: Vec<_> = data.complete_gaps().collect();
    let pass = complete.len() == 1
        && relative(complete[0].low, lo) <= 1e-2
        && relative(complete[0].high, hi) <= 1e-2
        && elapsed < Duration::from_secs(5);
    let found: Vec<String> = complete
        .iter()
        .map(|g| format!("[{:.4e}, {:.4e}]", g.low, g.high))
        .collect();
    outcome(
        pass,
        format!(
            "complete gaps {} vs expected [{lo:.4e}, {hi:.4e}] rad/s, {elapsed:.2?}",
            found.join(" ")
        ),
    )
}

fn no_gap_claims() -> Outcome {
    let mut failures = Vec::new();
    for name in ["table1_curldiv_muc0", "table1_mindlin_muc0"] {
        let data = scenario(name);
        if !data.gaps.is_empty() {
            failures.push(format!("{name}: {} gap(s)", data.gaps.len()));
        }
    }
    for name in ["table1_div", "table1_div_muc0"] {
        let data = scenario(name);
        let coupled = data
            .gaps
            .iter()
            .any(|g| g.involves(FamilyGroup::Longitudinal) || g.involves(FamilyGroup::Transverse));
        if coupled {
            failures.push(format!("{name}: gap on longitudinal/transverse waves"));
        }
    }
    if scenario("table1_relaxed_muc0").complete_gaps().count() != 0 {
        failures.push("table1_relaxed_muc0: complete gap".into());
    }
    let pass = failures.is_empty();
    outcome(
        pass,
        if pass {
            "curldiv/mindlin mu_c=0: none; div: no coupled-family gap; relaxed mu_c=0: no complete gap".into()
        } else {
            failures.join("; ")
        },
    )
}

fn partial_gap_claims() -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for name in ["table1_curldiv", "table1_mindlin"] {
        let data = scenario(name);
        let uncoupled_only = GapScope::PartialPerFamily(vec![FamilyGroup::Uncoupled]);
        let ok = !data.gaps.is_empty() && data.gaps.iter().all(|g| g.scope == uncoupled_only);
        pass &= ok;
        let gaps: Vec<String> = data
            .gaps
            .iter()
            .map(|g| format!("[{:.3e}, {:.3e}] {}", g.low, g.high, g.scope))
            .collect();
        parts.push(format!("{name}: {}", gaps.join(", ")));
    }
    outcome(pass, parts.join("; "))
}

fn structural_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = random_params(&mut rng);
        let k = log_uniform(&mut rng, 1e-2, 1e7);
        let pairs = [
            (
                longitudinal_symbol(k, &p, ModelVariant::MindlinFullGradient)
                    .unwrap()
                    .stiffness,
                longitudinal_symbol(k, &p, ModelVariant::CurlDiv)
                    .unwrap()
                    .stiffness,
            ),
            (
                transverse_symbol(k, &p, ModelVariant::MindlinFullGradient)
                    .unwrap()
                    .stiffness,
                transverse_symbol(k, &p, ModelVariant::CurlDiv)
                    .unwrap()
                    .stiffness,
            ),
        ];
        for (a, b) in pairs {
            let norm = frobenius_norm(&a);
            for i in 0..3 {
                for j in 0..3 {
                    worst = worst.max((a[i][j] - b[i][j]).abs() / (f64::EPSILON * norm));
                }
            }
        }
    }
    outcome(
        worst <= 4.0,
        format!("100 draws, largest entry difference {worst:.2} ulp of ||K||_F"),
    )
}

fn residual_verification() -> Outcome {
    let mut worst = 0.0f64;
    let mut count = 0usize;
    for p in [
        MaterialParameters::reference(),
        MaterialParameters::reference().with_mu_c(0.0),
    ] {
        for variant in ModelVariant::ALL {
            let data = sweep(variant, &p, &default_k_grid(variant, &p)).unwrap();
            for b in &data.branches {
                for s in &b.samples {
                    let r = verify_mode(variant, &p, b.family, s.k, s.omega, &s.mode).unwrap();
                    worst = worst.max(r);
                    count += 1;
                }
            }
        }
    }
    outcome(
        worst <= 1e-8,
        format!("{count} modes, max residual {worst:.2e}"),
    )
}

fn flat_branches() -> Outcome {
    let mut worst = 0.0f64;
    for factor in [5.0, 0.0] {
        let p = MaterialParameters::reference();
        let p = p.with_mu_c(factor * p.mu_e);
        let data = analyze(ModelVariant::DivOnly, &p).unwrap();
        let scale = p.derive().unwrap().omega_s;
        for b in data.group(FamilyGroup::Uncoupled) {
            let w0 = b.samples[0].omega;
            for s in &b.samples {
                worst = worst.max((s.omega - w0).abs() / if w0 > 0.0 { w0 } else { scale });
            }
        }
    }
    outcome(
        worst <= 1e-9,
        format!("largest relative variation {worst:.2e}"),
    )
}

/// Closed-form eigenvalues of a symmetric 3×3 matrix (trigonometric root
/// formula), polished by Newton steps on the characteristic cubic.
fn cubic_roots(a: &[[f64; 3]; 3]) -> [f64; 3] {
    let q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
    let off = a[0][1].powi(2) + a[0][2].powi(2) + a[1][2].powi(2);
    let p2 = (a[0][0] - q).powi(2) + (a[1][1] - q).powi(2) + (a[2][2] - q).powi(2) + 2.0 * off;
    if p2 == 0.0 {
        return [q; 3];
    }
    let p = (p2 / 6.0).sqrt();
    let b = |i: usize, j: usize| (a[i][j] - if i == j { q } else { 0.0 }) / p;
    let det_b = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1))
        - b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0))
        + b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    let phi = (det_b / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
    let high = q + 2.0 * p * phi.cos();
    let low = q + 2.0 * p * (phi + 2.0 * std::f64::consts::PI / 3.0).cos();
    let mut roots = [low, 3.0 * q - high - low, high];

    let c2 = 3.0 * q;
    let c1 = a[0][0] * a[1][1] + a[0][0] * a[2][2] + a[1][1] * a[2][2] - off;
    let c0 = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[1][2])
        - a[0][1] * (a[0][1] * a[2][2] - a[1][2] * a[0][2])
        + a[0][2] * (a[0][1] * a[1][2] - a[1][1] * a[0][2]);
    let f = |x: f64| ((x - c2) * x + c1) * x - c0;
    let df = |x: f64| (3.0 * x - 2.0 * c2) * x + c1;
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let d = df(*r);
            if d == 0.0 {
                break;
            }
            let next = *r - f(*r) / d;
            if f(next).abs() < f(*r).abs() {
                *r = next;
            } else {
                break;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots
}

fn eigensolver_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut eig_err, mut orth_err, mut res_err) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let scale = 10f64.powf(rng.gen_range(-3.0..6.0));
        let mut a = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in i..3 {
                let x = rng.gen_range(-1.0..1.0) * scale;
                a[i][j] = x;
                a[j][i] = x;
            }
        }
        let e = eigh(&a).unwrap();
        let oracle = cubic_roots(&a);
        let radius = e.eigenvalues.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for (g, w) in e.eigenvalues.iter().zip(oracle) {
            eig_err = eig_err.max((g - w).abs() / radius);
        }
        let norm = frobenius_norm(&a);
        for i in 0..3 {
            for j in 0..3 {
                let dot: f64 = (0..3)
                    .map(|r| e.eigenvectors[r][i] * e.eigenvectors[r][j])
                    .sum();
                orth_err = orth_err.max((dot - if i == j { 1.0 } else { 0.0 }).abs());
            }
            let v = e.eigenvector(i);
            let r: f64 = (0..3)
                .map(|row| {
                    let av: f64 = (0..3).map(|c| a[row][c] * v[c]).sum();
                    (av - e.eigenvalues[i] * v[row]).powi(2)
                })
                .sum::<f64>()
                .sqrt();
            res_err = res_err.max(r / norm);
        }
    }
    outcome(
        eig_err <= 1e-8 && orth_err <= 1e-10 && res_err <= 1e-10,
        format!(
            "1000 matrices: eigenvalue error {eig_err:.2e} (rel. spectral radius), orthogonality {orth_err:.2e}, residual {res_err:.2e}"
        ),
    )
}

fn internal_variable_limit() -> Outcome {
    let p = MaterialParameters {
        l_c: 1e-9,
        l_d: 1e-9,
        ..MaterialParameters::reference()
    };
    let m = p.macro_moduli().unwrap();
    let long = ((m.lambda_macro + 2.0 * m.mu_macro) / p.rho).sqrt();
    let trans = (m.mu_macro / p.rho).sqrt();
    let mut pass = relative(long, 328.6) <= 1e-2 && relative(trans, 182.6) <= 1e-2;
    let mut parts = Vec::new();
    for variant in ModelVariant::ALL {
        let (cl, ct) = acoustic_slopes(variant, &p).unwrap();
        pass &= relative(cl, long) <= 1e-2 && relative(ct, trans) <= 1e-2;
        parts.push(format!("{variant} ({cl:.2}, {ct:.2})"));
    }
    outcome(
        pass,
        format!("expected ({long:.2}, {trans:.2}) m/s; {}", parts.join(", ")),
    )
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("macroscopic consistency", macroscopic_consistency),
        ("cut-off reproduction", cutoff_reproduction),
        ("complete band gap, relaxed model", relaxed_complete_gap),
        ("no-gap claims", no_gap_claims),
        ("partial-gap claims", partial_gap_claims),
        ("full gradient = Curl + Div", structural_identity),
        ("residual verification", residual_verification),
        ("flat Div-only uncoupled branches", flat_branches),
        ("eigensolver oracle", eigensolver_oracle),
        ("internal-variable limit", internal_variable_limit),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
