//! Shipped rotation systems, parsed on demand.

use crate::io::{parse_uni, IoError};
use crate::planar_map::PlanarMap;

const FILES: &[(&str, &str)] = &[
    ("venn", include_str!("../../data/venn.uni")),
    ("knot_8", include_str!("../../data/knot_8.uni")),
    ("knot_9", include_str!("../../data/knot_9.uni")),
    ("knot_10", include_str!("../../data/knot_10.uni")),
    ("knot_11", include_str!("../../data/knot_11.uni")),
    ("knot_12a", include_str!("../../data/knot_12a.uni")),
    ("knot_12b", include_str!("../../data/knot_12b.uni")),
    ("knot_12c", include_str!("../../data/knot_12c.uni")),
    ("tight_link_12", include_str!("../../data/tight_link_12.uni")),
    ("base_9", include_str!("../../data/base_9.uni")),
    ("base_15", include_str!("../../data/base_15.uni")),
    ("base_18", include_str!("../../data/base_18.uni")),
    ("base_24", include_str!("../../data/base_24.uni")),
    ("tangle_11", include_str!("../../data/tangle_11.uni")),
];

/// Names of every shipped data file, without the `.uni` suffix.
pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub(crate) fn load(name: &str) -> Result<PlanarMap, IoError> {
    let text = text(name).unwrap_or_else(|| panic!("no shipped data file named {name}"));
    parse_uni(text)
}
