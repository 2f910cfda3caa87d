//! Standalone SVG dispersion plot: ω (rad/s) against k (1/m), one polyline
//! per branch, band gaps shaded.

use std::fmt::Write as _;

use micromorph_core::{DispersionData, FamilyGroup, GapScope};

const WIDTH: f64 = 960.0;
const HEIGHT: f64 = 640.0;
const LEFT: f64 = 96.0;
const RIGHT: f64 = 180.0;
const TOP: f64 = 48.0;
const BOTTOM: f64 = 72.0;

fn family_colour(group: FamilyGroup, index: usize) -> &'static str {
    const LONG: [&str; 3] = ["#1f4e9c", "#3f7fd6", "#8fb5ee"];
    const TRANS: [&str; 3] = ["#b8321f", "#e0663f", "#f0a97f"];
    const UNC: [&str; 3] = ["#2a7d3a", "#4fae5c", "#9ad39f"];
    let palette = match group {
        FamilyGroup::Longitudinal => &LONG,
        FamilyGroup::Transverse => &TRANS,
        FamilyGroup::Uncoupled => &UNC,
    };
    palette[index.min(2)]
}

/// About five round tick values covering `[0, max]`.
fn ticks(max: f64) -> Vec<f64> {
    if max.is_nan() || max <= 0.0 {
        return vec![0.0];
    }
    let raw = max / 5.0;
    let magnitude = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * magnitude)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * magnitude);
    (0..)
        .map(|i| i as f64 * step)
        .take_while(|t| *t <= max * (1.0 + 1e-9))
        .collect()
}

fn tick_label(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.1e}")
    }
}

/// Renders `data` with the frequency axis cut at `omega_max`.
pub fn render_svg(data: &DispersionData, omega_max: f64) -> String {
    let k_lo = data.k_grid().first().copied().unwrap_or(0.0);
    let k_hi = data.k_grid().last().copied().unwrap_or(1.0);
    let (pw, ph) = (WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM);
    let x = |k: f64| LEFT + (k - k_lo) / (k_hi - k_lo) * pw;
    let y = |w: f64| TOP + ph - w / omega_max * ph;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(s, r#"<title>{} dispersion</title>"#, data.variant);
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="plot-area"><rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}"/></clipPath></defs>"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    for g in &data.gaps {
        let (lo, hi) = (g.low.min(omega_max), g.high.min(omega_max));
        let (fill, opacity) = match g.scope {
            GapScope::Complete => ("#f2c744", 0.55),
            GapScope::PartialPerFamily(_) => ("#bbbbbb", 0.25),
        };
        let _ = writeln!(
            s,
            r#"<rect class="gap" x="{LEFT}" y="{:.2}" width="{pw}" height="{:.2}" fill="{fill}" fill-opacity="{opacity}"><title>{} gap {:.4e}-{:.4e} rad/s</title></rect>"#,
            y(hi),
            y(lo) - y(hi),
            g.scope,
            g.low,
            g.high
        );
    }

    let _ = writeln!(
        s,
        r##"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="#333"/>"##
    );
    for t in ticks(k_hi) {
        if t < k_lo {
            continue;
        }
        let _ = writeln!(
            s,
            r##"<line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}" stroke="#333"/><text x="{0:.2}" y="{3:.2}" text-anchor="middle">{4}</text>"##,
            x(t),
            TOP + ph,
            TOP + ph + 6.0,
            TOP + ph + 22.0,
            tick_label(t)
        );
    }
    for t in ticks(omega_max) {
        let _ = writeln!(
            s,
            r##"<line x1="{0:.2}" y1="{1:.2}" x2="{2:.2}" y2="{1:.2}" stroke="#333"/><text x="{3:.2}" y="{4:.2}" text-anchor="end">{5}</text>"##,
            LEFT - 6.0,
            y(t),
            LEFT,
            LEFT - 10.0,
            y(t) + 4.0,
            tick_label(t)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">wavenumber k (1/m)</text>"#,
        LEFT + pw / 2.0,
        HEIGHT - 20.0
    );
    let _ = writeln!(
        s,
        r#"<text transform="translate(22 {:.2}) rotate(-90)" text-anchor="middle">angular frequency ω (rad/s)</text>"#,
        TOP + ph / 2.0
    );

    let _ = writeln!(
        s,
        r#"<g clip-path="url(#plot-area)" fill="none" stroke-width="1.8">"#
    );
    for b in &data.branches {
        let points: Vec<String> = b
            .samples
            .iter()
            .map(|p| format!("{:.2},{:.2}", x(p.k), y(p.omega)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline class="branch" data-branch="{}" stroke="{}" points="{}"/>"#,
            b.name(),
            family_colour(b.group(), b.index),
            points.join(" ")
        );
    }
    let _ = writeln!(s, "</g>");

    let legend_x = WIDTH - RIGHT + 20.0;
    for (i, b) in data.branches.iter().enumerate() {
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{legend_x}" y1="{ly}" x2="{}" y2="{ly}" stroke="{}" stroke-width="3"/><text x="{}" y="{}">{} ({})</text>"#,
            legend_x + 24.0,
            family_colour(b.group(), b.index),
            legend_x + 30.0,
            ly + 4.0,
            b.name(),
            b.group().name()
        );
    }
    s.push_str("</svg>\n");
    s
}
