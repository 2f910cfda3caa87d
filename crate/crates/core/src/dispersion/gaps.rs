//! Band-gap detection from branch frequency coverage.
//!
//! Each sorted branch is continuous in `k`, so it covers every frequency
//! between its sampled minimum and maximum. A family's gaps are the
//! complement of the union of its branches' ranges inside `(0, ω_max)`.
//! The frequency axis is then cut at every gap endpoint and each piece is
//! tagged with the set of families that have no wave there: all three makes
//! it a complete gap, any smaller non-empty set a partial one.

use std::fmt;

use super::{sweep, Asymptote, DispersionData};
use crate::error::{Error, Result};
use crate::symbol::FamilyGroup;

/// Gaps narrower than this fraction of `ω_max` are discarded.
pub const RESOLUTION_FLOOR: f64 = 1e-4;
/// Each extension doubles `k_max`; give up after this many.
const MAX_EXTENSIONS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapScope {
    Complete,
    /// Families (never all three) that have no propagating wave in the band.
    PartialPerFamily(Vec<FamilyGroup>),
}

impl fmt::Display for GapScope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GapScope::Complete => f.write_str("complete"),
            GapScope::PartialPerFamily(families) => {
                let names: Vec<&str> = families.iter().map(|g| g.name()).collect();
                write!(f, "partial({})", names.join("+"))
            }
        }
    }
}

/// Frequency band (rad/s) without propagating waves in the scoped families.
#[derive(Debug, Clone, PartialEq)]
pub struct GapInterval {
    pub low: f64,
    pub high: f64,
    pub scope: GapScope,
}

impl GapInterval {
    pub fn width(&self) -> f64 {
        self.high - self.low
    }

    pub fn contains(&self, omega: f64) -> bool {
        omega > self.low && omega < self.high
    }

    pub fn involves(&self, group: FamilyGroup) -> bool {
        match &self.scope {
            GapScope::Complete => true,
            GapScope::PartialPerFamily(families) => families.contains(&group),
        }
    }
}

/// `1.5 · max(ω_p, ω_r)`.
pub fn default_omega_max(params: &crate::material::MaterialParameters) -> Result<f64> {
    let d = params.derive()?;
    Ok(1.5 * d.omega_p.max(d.omega_r))
}

/// Detects complete and partial gaps below `omega_max`.
///
/// If an unbounded branch has not yet reached `omega_max` at the end of the
/// grid, `data` is re-swept on the grid scaled by two until it has (at most
/// 24 times).
pub fn band_gaps(data: &mut DispersionData, omega_max: f64) -> Result<Vec<GapInterval>> {
    if !(omega_max.is_finite() && omega_max > 0.0) {
        return Err(Error::Numerical(format!("invalid omega_max {omega_max}")));
    }
    let mut extensions = 0;
    while needs_extension(data, omega_max) {
        if extensions == MAX_EXTENSIONS {
            return Err(Error::InsufficientRange {
                k_max: *data.k_grid().last().unwrap_or(&0.0),
                omega_max,
            });
        }
        let grid: Vec<f64> = data.k_grid().iter().map(|k| 2.0 * k).collect();
        *data = sweep(data.variant, &data.params, &grid)?;
        extensions += 1;
    }

    let per_family: Vec<(FamilyGroup, Vec<(f64, f64)>)> = FamilyGroup::ALL
        .into_iter()
        .map(|group| (group, family_gaps(data, group, omega_max)))
        .collect();

    let mut cuts: Vec<f64> = vec![0.0, omega_max];
    for (_, gaps) in &per_family {
        for &(lo, hi) in gaps {
            cuts.push(lo);
            cuts.push(hi);
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut pieces: Vec<(f64, f64, Vec<FamilyGroup>)> = Vec::new();
    for w in cuts.windows(2) {
        let mid = 0.5 * (w[0] + w[1]);
        let open: Vec<FamilyGroup> = per_family
            .iter()
            .filter(|(_, gaps)| inside(gaps, mid))
            .map(|(g, _)| *g)
            .collect();
        if open.is_empty() {
            continue;
        }
        // Only merge across a cut that is silent for every family involved;
        // a flat branch is a zero-width range and must still split the gap.
        let joinable = per_family
            .iter()
            .filter(|(g, _)| open.contains(g))
            .all(|(_, gaps)| inside(gaps, w[0]));
        match pieces.last_mut() {
            Some(last) if joinable && last.1 == w[0] && last.2 == open => last.1 = w[1],
            _ => pieces.push((w[0], w[1], open)),
        }
    }

    let floor = RESOLUTION_FLOOR * omega_max;
    Ok(pieces
        .into_iter()
        .filter(|(lo, hi, _)| hi - lo >= floor)
        .map(|(low, high, families)| GapInterval {
            low,
            high,
            scope: if families.len() == FamilyGroup::ALL.len() {
                GapScope::Complete
            } else {
                GapScope::PartialPerFamily(families)
            },
        })
        .collect())
}

fn inside(gaps: &[(f64, f64)], omega: f64) -> bool {
    gaps.iter().any(|&(lo, hi)| omega > lo && omega < hi)
}

fn needs_extension(data: &DispersionData, omega_max: f64) -> bool {
    data.branches.iter().any(|b| {
        matches!(b.asymptote, Asymptote::Unbounded { .. }) && b.omega_range().1 < omega_max
    })
}

/// Gaps of one family inside `(0, omega_max)`, unfiltered.
fn family_gaps(data: &DispersionData, group: FamilyGroup, omega_max: f64) -> Vec<(f64, f64)> {
    let mut ranges: Vec<(f64, f64)> = data.group(group).map(|b| b.omega_range()).collect();
    ranges.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut gaps = Vec::new();
    let mut covered = 0.0;
    for (lo, hi) in ranges {
        if lo >= omega_max {
            break;
        }
        if lo > covered {
            gaps.push((covered, lo));
        }
        covered = f64::max(covered, hi);
    }
    if covered < omega_max {
        gaps.push((covered, omega_max));
    }
    gaps
}
