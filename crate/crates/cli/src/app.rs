//! Command-line interface and subcommand dispatch.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use micromorph_core::dispersion::default_omega_max;
use micromorph_core::dispersion::grid::k_grid;
use micromorph_core::{band_gaps, sweep, verify_mode, DispersionData, ModelVariant};

use crate::config::{parse_config, Artifact, ScenarioConfig};
use crate::error::CliError;
use crate::{plot, report, scenarios};

/// Residuals above this fail `validate`.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "micromorph",
    version,
    about = "Dispersion curves and band gaps of micromorphic media"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print characteristic speeds, frequencies and macroscopic moduli.
    Derive,
    /// Sweep the wavenumber grid and emit `k,family,branch,omega` CSV.
    Dispersion,
    /// Report complete and partial band gaps.
    Bandgap,
    /// Check admissibility and substitute every computed mode back into the
    /// equations of motion.
    Validate,
    /// Draw the dispersion curves as SVG.
    Plot,
    /// Write every artifact listed in the scenario's [output] table.
    Run,
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Options {
    /// Scenario file, or the name of a bundled scenario (e.g. table1_relaxed).
    #[arg(long, global = true)]
    pub config: Option<String>,
    /// Output directory; without it, single-artifact commands print to stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest wavenumber of the sweep (1/m).
    #[arg(long, global = true)]
    pub kmax: Option<f64>,
    /// Number of wavenumbers in the sweep.
    #[arg(long, global = true)]
    pub points: Option<usize>,
    /// Curvature model, overriding the scenario.
    #[arg(long, global = true)]
    pub variant: Option<String>,
}

/// Reads the scenario and applies command-line overrides.
pub fn load_scenario(options: &Options) -> Result<ScenarioConfig, CliError> {
    let source = options
        .config
        .as_deref()
        .ok_or_else(|| CliError::Usage("--config <path or bundled scenario> is required".into()))?;
    let path = Path::new(source);
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(source_err) => match scenarios::bundled(source) {
            Some(text) if !path.exists() => text.to_string(),
            _ => {
                return Err(CliError::File {
                    path: path.to_path_buf(),
                    source: source_err,
                })
            }
        },
    };
    let mut config = parse_config(&text)?;

    if let Some(name) = &options.variant {
        config.variant = name.parse::<ModelVariant>()?;
    }
    if let Some(k_max) = options.kmax {
        if !(k_max.is_finite() && k_max > config.sweep.k_min) {
            return Err(CliError::Usage(format!(
                "--kmax {k_max} must be finite and greater than k_min = {}",
                config.sweep.k_min
            )));
        }
        config.sweep.k_max = Some(k_max);
    }
    if let Some(points) = options.points {
        if points < 2 {
            return Err(CliError::Usage("--points must be at least 2".into()));
        }
        config.sweep.points = points;
    }
    Ok(config)
}

/// Sweep plus gap scan below the default frequency ceiling. Returns the
/// data and the ceiling used.
///
/// The branches keep the requested grid. The gap scan may need a longer one
/// (until every unbounded branch passes the ceiling); it extends a copy.
pub fn analyze_scenario(config: &ScenarioConfig) -> Result<(DispersionData, f64), CliError> {
    let params = config.material.to_parameters();
    params.ensure_admissible()?;
    let s = &config.sweep;
    let grid = k_grid(
        s.k_min,
        s.resolved_k_max(config.variant, &params),
        s.points,
        s.spacing,
    );
    let mut data = sweep(config.variant, &params, &grid)?;
    let omega_max = default_omega_max(&params)?;
    data.gaps = band_gaps(&mut data.clone(), omega_max)?;
    Ok((data, omega_max))
}

/// Largest residual over every mode of a sweep, with the branch and `k`
/// where it occurs.
pub fn max_residual(data: &DispersionData) -> Result<(f64, &'static str, f64), CliError> {
    let mut worst = (0.0, "", 0.0);
    for b in &data.branches {
        for s in &b.samples {
            let r = verify_mode(data.variant, &data.params, b.family, s.k, s.omega, &s.mode)?;
            if r > worst.0 || r.is_nan() {
                worst = (r, b.name(), s.k);
            }
        }
    }
    Ok(worst)
}

fn create_file(dir: &Path, name: &str) -> Result<(PathBuf, fs::File), CliError> {
    let file_err = |path: &Path, source| CliError::File {
        path: path.to_path_buf(),
        source,
    };
    fs::create_dir_all(dir).map_err(|e| file_err(dir, e))?;
    let path = dir.join(name);
    let file = fs::File::create(&path).map_err(|e| file_err(&path, e))?;
    Ok((path, file))
}

fn write_artifact(
    artifact: Artifact,
    config: &ScenarioConfig,
    analysis: Option<&(DispersionData, f64)>,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut out = std::io::BufWriter::new(out);
    match (artifact, analysis) {
        (Artifact::Derived, _) => {
            report::write_derived(config.variant, &config.material.to_parameters(), &mut out)?
        }
        (Artifact::Csv, Some((data, _))) => report::write_dispersion_csv(data, &mut out)?,
        (Artifact::Svg, Some((data, omega_max))) => {
            out.write_all(plot::render_svg(data, *omega_max).as_bytes())?
        }
        (Artifact::Gaps, Some((data, _))) => report::write_gaps_csv(data, &mut out)?,
        (_, None) => unreachable!("sweep artifacts are always emitted with an analysis"),
    }
    out.flush()?;
    Ok(())
}

/// Emits one artifact to `--out` (under its standard file name) or to
/// `stdout`.
fn emit(
    artifact: Artifact,
    config: &ScenarioConfig,
    analysis: Option<&(DispersionData, f64)>,
    out_dir: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let Some(dir) = out_dir else {
        return write_artifact(artifact, config, analysis, stdout);
    };
    let (path, mut file) = create_file(dir, artifact.file_name())?;
    write_artifact(artifact, config, analysis, &mut file).map_err(|e| match e {
        CliError::Io(source) => CliError::File {
            path: path.clone(),
            source,
        },
        other => other,
    })?;
    writeln!(stdout, "wrote {}", path.display())?;
    Ok(())
}

/// Runs one subcommand, writing human-readable output to `stdout`.
pub fn execute(
    command: Command,
    options: &Options,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let config = load_scenario(options)?;
    let params = config.material.to_parameters();
    let out_dir = options.out.as_deref();
    match command {
        Command::Derive => emit(Artifact::Derived, &config, None, out_dir, stdout),
        Command::Dispersion => {
            let analysis = analyze_scenario(&config)?;
            emit(Artifact::Csv, &config, Some(&analysis), out_dir, stdout)
        }
        Command::Bandgap => {
            let analysis = analyze_scenario(&config)?;
            report::write_gaps_text(&analysis.0, analysis.1, stdout)?;
            if out_dir.is_some() {
                emit(Artifact::Gaps, &config, Some(&analysis), out_dir, stdout)?;
            }
            Ok(())
        }
        Command::Validate => {
            let report = params.validate();
            writeln!(stdout, "admissibility: {report}")?;
            params.ensure_admissible()?;
            let (data, _) = analyze_scenario(&config)?;
            let modes: usize = data.branches.iter().map(|b| b.samples.len()).sum();
            let (worst, branch, k) = max_residual(&data)?;
            writeln!(
                stdout,
                "checked {modes} modes; max residual {worst:.3e} ({branch} at k = {k:.4e} 1/m); tolerance {RESIDUAL_TOLERANCE:.0e}"
            )?;
            if worst <= RESIDUAL_TOLERANCE {
                writeln!(stdout, "ok")?;
                Ok(())
            } else {
                Err(CliError::Verification(format!(
                    "residual {worst:.3e} of {branch} at k = {k:.4e} exceeds {RESIDUAL_TOLERANCE:.0e}"
                )))
            }
        }
        Command::Plot => {
            let analysis = analyze_scenario(&config)?;
            emit(Artifact::Svg, &config, Some(&analysis), out_dir, stdout)
        }
        Command::Run => {
            let analysis = analyze_scenario(&config)?;
            let dir = out_dir.unwrap_or(Path::new("."));
            for &artifact in &config.output.artifacts {
                emit(artifact, &config, Some(&analysis), Some(dir), stdout)?;
            }
            Ok(())
        }
    }
}
