//! DOT and SVG output. These are drawing aids only.

use std::fmt::Write;

use crate::planar_map::PlanarMap;

use super::embed::{tutte_embed, Embedding};

/// Vertices evenly spaced on the unit circle in index order.
pub fn circular_layout(map: &PlanarMap) -> Embedding {
    let n = map.vertex_count().max(1) as f64;
    let coords = (0..map.vertex_count())
        .map(|v| {
            let t = std::f64::consts::TAU * v as f64 / n;
            (t.cos(), t.sin())
        })
        .collect();
    Embedding {
        coords,
        residual: 0.0,
    }
}

/// Tutte layout on the largest face when it exists, else the circle.
fn best_layout(map: &PlanarMap) -> (Embedding, bool) {
    let faces = map.faces();
    let outer = (0..faces.len()).max_by_key(|&f| (faces.degree(f), std::cmp::Reverse(f)));
    match outer.map(|f| tutte_embed(map, f)) {
        Some(Ok(emb)) => (emb, true),
        _ => (circular_layout(map), false),
    }
}

pub fn to_dot(map: &PlanarMap) -> String {
    let (emb, _) = best_layout(map);
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for (v, (x, y)) in emb.coords.iter().enumerate() {
        let _ = writeln!(out, "  {v} [pos=\"{:.4},{:.4}!\"];", x * 4.0, y * 4.0);
    }
    for e in 0..map.edge_count() {
        let (a, b) = map.endpoints(e);
        let _ = writeln!(out, "  {a} -- {b} [label=\"{}\"];", map.edge_label(e));
    }
    out.push_str("}\n");
    out
}

pub fn to_svg(map: &PlanarMap) -> String {
    let (emb, straight) = best_layout(map);
    let size = 400.0;
    let scale = size * 0.42;
    let at = |v: usize| {
        let (x, y) = emb.coords[v];
        (size / 2.0 + x * scale, size / 2.0 - y * scale)
    };
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    );
    let mut multiplicity = std::collections::HashMap::new();
    for e in 0..map.edge_count() {
        let (a, b) = map.endpoints(e);
        let (p, q) = (at(a), at(b));
        let key = (a.min(b), a.max(b));
        let nth = *multiplicity.entry(key).and_modify(|n| *n += 1).or_insert(0usize);
        if a == b {
            let _ = writeln!(
                out,
                "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\" fill=\"none\" stroke=\"black\"/>",
                p.0,
                p.1 - 12.0 - 6.0 * nth as f64,
                12.0 + 6.0 * nth as f64
            );
        } else if straight && nth == 0 {
            let _ = writeln!(
                out,
                "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
                p.0, p.1, q.0, q.1
            );
        } else {
            // bend parallel edges apart around the chord midpoint
            let (mx, my) = ((p.0 + q.0) / 2.0, (p.1 + q.1) / 2.0);
            let (dx, dy) = (q.0 - p.0, q.1 - p.1);
            let len = dx.hypot(dy).max(1e-9);
            let sign = if nth % 2 == 0 { 1.0 } else { -1.0 };
            let bend = 20.0 * (1 + nth / 2) as f64 * sign;
            let (cx, cy) = (mx - dy / len * bend, my + dx / len * bend);
            let _ = writeln!(
                out,
                "  <path d=\"M {:.2} {:.2} Q {:.2} {:.2} {:.2} {:.2}\" fill=\"none\" stroke=\"black\"/>",
                p.0, p.1, cx, cy, q.0, q.1
            );
        }
    }
    for v in 0..map.vertex_count() {
        let (x, y) = at(v);
        let _ = writeln!(
            out,
            "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"5\" fill=\"white\" stroke=\"black\"/>"
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{build_map, fixtures};

    #[test]
    fn svg_has_one_marker_per_vertex() {
        let svg = to_svg(&fixtures::octahedron());
        assert_eq!(svg.matches("r=\"5\"").count(), 6);
        assert_eq!(svg.matches("<line").count(), 12);
    }

    #[test]
    fn multigraphs_fall_back_to_curves() {
        let trefoil = build_map(&[vec![0, 3, 5, 2], vec![1, 4, 3, 0], vec![2, 5, 4, 1]]).unwrap();
        let svg = to_svg(&trefoil);
        assert_eq!(svg.matches("<path").count(), 6);
        assert!(to_dot(&trefoil).contains("0 -- 1"));
    }
}
