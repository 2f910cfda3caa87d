//! Text and CSV renderings of analysis results.

use std::io::{self, Write};

use micromorph_core::{DispersionData, GapScope, MaterialParameters, ModelVariant};

use crate::error::CliError;

/// Width of the right-aligned key column in text reports.
const KEY_WIDTH: usize = 14;

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

/// Keeps the original I/O error (and its kind) instead of csv's wrapper.
fn io_error(e: csv::Error) -> io::Error {
    match e.into_kind() {
        csv::ErrorKind::Io(e) => e,
        other => io::Error::other(format!("{other:?}")),
    }
}

fn number(x: f64) -> String {
    format!("{x:.15e}")
}

/// One row per (branch, k): `k,family,branch,omega`, branches in
/// longitudinal, transverse, uncoupled order, `branch` the ordinal within
/// the family.
pub fn write_dispersion_csv<W: Write>(data: &DispersionData, out: W) -> io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["k", "family", "branch", "omega"])
        .map_err(io_error)?;
    for b in &data.branches {
        let index = b.index.to_string();
        for s in &b.samples {
            w.write_record([
                number(s.k).as_str(),
                b.group().name(),
                &index,
                &number(s.omega),
            ])
            .map_err(io_error)?;
        }
    }
    w.flush()
}

/// `low,high,scope` with scope `complete` or `partial(family+…)`.
pub fn write_gaps_csv<W: Write>(data: &DispersionData, out: W) -> io::Result<()> {
    let mut w = csv_writer(out);
    w.write_record(["low", "high", "scope"]).map_err(io_error)?;
    for g in &data.gaps {
        w.write_record([number(g.low), number(g.high), g.scope.to_string()])
            .map_err(io_error)?;
    }
    w.flush()
}

fn line(
    out: &mut (impl Write + ?Sized),
    key: &str,
    value: impl std::fmt::Display,
) -> io::Result<()> {
    writeln!(out, "{key:>KEY_WIDTH$} = {value}")
}

/// Characteristic quantities and macroscopic moduli, three significant
/// digits.
pub fn write_derived(
    variant: ModelVariant,
    params: &MaterialParameters,
    out: &mut (impl Write + ?Sized),
) -> Result<(), CliError> {
    let d = params.derive()?;
    let m = params.macro_moduli()?;
    line(out, "variant", variant)?;
    for (name, value, unit) in d.entries() {
        line(out, name, format_args!("{value:.2e} {unit}"))?;
    }
    line(out, "mu_macro", format_args!("{:.2e} Pa", m.mu_macro))?;
    line(
        out,
        "lambda_macro",
        format_args!("{:.2e} Pa", m.lambda_macro),
    )?;
    line(out, "E_macro", format_args!("{:.2e} Pa", m.e_macro))?;
    line(out, "nu_macro", format_args!("{:.2}", m.nu_macro))?;
    let curvature = if params.validate().strictly_positive_curvature {
        "strictly positive"
    } else {
        "positive semi-definite (a curvature length is zero)"
    };
    line(out, "curvature", curvature)?;
    Ok(())
}

/// Human-readable gap list.
pub fn write_gaps_text(
    data: &DispersionData,
    omega_max: f64,
    out: &mut (impl Write + ?Sized),
) -> io::Result<()> {
    line(out, "variant", data.variant)?;
    line(out, "omega_max", format_args!("{omega_max:.4e} rad/s"))?;
    if data.gaps.is_empty() {
        return writeln!(out, "no band gaps");
    }
    for g in &data.gaps {
        let kind = match g.scope {
            GapScope::Complete => "complete gap",
            GapScope::PartialPerFamily(_) => "partial gap",
        };
        line(
            out,
            kind,
            format_args!("[{:.4e}, {:.4e}] rad/s  {}", g.low, g.high, g.scope),
        )?;
    }
    Ok(())
}
