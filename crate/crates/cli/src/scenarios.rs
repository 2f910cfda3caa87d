//! Scenario files shipped with the binary: the reference metamaterial under
//! each curvature model, with and without the Cosserat couple modulus.

pub const BUNDLED: [(&str, &str); 8] = [
    (
        "table1_relaxed",
        include_str!("../scenarios/table1_relaxed.cfg"),
    ),
    (
        "table1_relaxed_muc0",
        include_str!("../scenarios/table1_relaxed_muc0.cfg"),
    ),
    ("table1_div", include_str!("../scenarios/table1_div.cfg")),
    (
        "table1_div_muc0",
        include_str!("../scenarios/table1_div_muc0.cfg"),
    ),
    (
        "table1_curldiv",
        include_str!("../scenarios/table1_curldiv.cfg"),
    ),
    (
        "table1_curldiv_muc0",
        include_str!("../scenarios/table1_curldiv_muc0.cfg"),
    ),
    (
        "table1_mindlin",
        include_str!("../scenarios/table1_mindlin.cfg"),
    ),
    (
        "table1_mindlin_muc0",
        include_str!("../scenarios/table1_mindlin_muc0.cfg"),
    ),
];

/// Looks a bundled scenario up by name, with or without the `.cfg` suffix.
pub fn bundled(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".cfg").unwrap_or(name);
    BUNDLED
        .iter()
        .find(|(n, _)| *n == stem)
        .map(|(_, text)| *text)
}
