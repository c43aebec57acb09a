//! Tight knot shadows via special plane graphs and laddering.

use crate::knot_graph::Universe;
use crate::medial::{angle_components, classify_special, is_special, medial, wheel, PlaneGraph, SpecialTag};
use crate::planar_map::{canonical_form, Dart};

use super::data::load;
use super::{check_knot, check_lune_free, ensure, ConstructionError, RewriteSite, Surgery, UnrealizableReason};

/// Ladders a cubic graph at the vertex of dart `d`: both edges `d` and
/// `sigma(d)` get four subdivision vertices and the matching pairs are
/// joined by four rungs across the face between them.
fn ladder_cubic(g: &PlaneGraph, d: Dart) -> Result<PlaneGraph, ConstructionError> {
    let map = g.map();
    let d2 = map.sigma(d);
    let mut s = Surgery::new(map);
    let path_p: Vec<u32> = (0..5).map(|_| s.fresh()).collect();
    let path_q: Vec<u32> = (0..5).map(|_| s.fresh()).collect();
    let rungs: Vec<u32> = (0..4).map(|_| s.fresh()).collect();
    s.set(map, d, path_p[0]);
    s.set(map, map.alpha(d), path_p[4]);
    s.set(map, d2, path_q[0]);
    s.set(map, map.alpha(d2), path_q[4]);
    // the face between the two edges lies to the left of the first and to
    // the right of the second
    for i in 0..4 {
        s.push_vertex(vec![path_p[i + 1], rungs[i], path_p[i]]);
    }
    for i in 0..4 {
        s.push_vertex(vec![rungs[i], path_q[i + 1], path_q[i]]);
    }
    Ok(PlaneGraph::new(s.build()?)?)
}

/// Ladders a special plane graph at a vertex of degree 3, adding twelve
/// edges and keeping the graph special and its angle-cycle count.
///
/// Cubic graphs get the ladder at the site vertex; triangulations get it at
/// the corresponding place of their dual and are dualized back; the wheel
/// `W_n` becomes `W_{n+6}`.
pub fn ladder(g: &PlaneGraph, site: RewriteSite) -> Result<PlaneGraph, ConstructionError> {
    let map = g.map();
    site.check(map)?;
    let RewriteSite::Vertex(d) = site else {
        return Err(ConstructionError::BadSite("laddering needs a vertex".into()));
    };
    let w = map.vertex_of(d);
    if map.degree(w) != 3 {
        return Err(ConstructionError::NotDegreeThree(w));
    }
    if !is_special(g) {
        return Err(ConstructionError::NotSpecial);
    }
    let class = classify_special(g);
    let out = match class.tag {
        SpecialTag::Wheel => wheel(class.wheel_size.expect("wheels report their size") + 6)?,
        SpecialTag::Cubic => ladder_cubic(g, d)?,
        SpecialTag::Triangulation => {
            // the dual is cubic; ladder it at the dual vertex of the face of d
            let dual = g.dual();
            let face = map.faces().face_of[d];
            let dd = dual.map().darts_of(face).start;
            ladder_cubic(&dual, dd)?.dual()
        }
        SpecialTag::Other => return Err(ConstructionError::NotSpecial),
    };
    ensure(out.map().edge_count() == map.edge_count() + 12, || {
        format!("ladder has {} edges from {}", out.map().edge_count(), map.edge_count())
    })?;
    ensure(is_special(&out), || "ladder output is not special".into())?;
    let (before, after) = (angle_components(g), angle_components(&out));
    ensure(before == after, || {
        format!("ladder changed the angle-cycle count from {before} to {after}")
    })?;
    Ok(out)
}

/// The first dart at a degree-3 vertex of the canonical form.
fn canonical_site(g: &PlaneGraph) -> Result<(PlaneGraph, RewriteSite), ConstructionError> {
    let c = PlaneGraph::new(canonical_form(g.map()))?;
    let d = (0..c.map().dart_count())
        .find(|&d| c.map().degree(c.map().vertex_of(d)) == 3)
        .ok_or(ConstructionError::NotDegreeThree(0))?;
    Ok((c, RewriteSite::Vertex(d)))
}

fn check_tight_knot(u: &Universe, v: usize, what: &str) -> Result<(), ConstructionError> {
    check_lune_free(u, what)?;
    check_knot(u, v, what)?;
    ensure(u.is_tight() == Ok(true), || format!("{what} is not tight"))
}

/// Special plane graphs with 9, 15, 18 and 24 edges whose medials are
/// tight lune-free knot shadows. All four are stored as cubic graphs.
pub fn figure25(v: usize) -> Result<PlaneGraph, ConstructionError> {
    let name = match v {
        9 => "base_9",
        15 => "base_15",
        18 => "base_18",
        24 => "base_24",
        _ => return Err(ConstructionError::BadSize(v)),
    };
    let g = PlaneGraph::new(load(name)?)?;
    ensure(g.map().edge_count() == v, || format!("{name} has {} edges", g.map().edge_count()))?;
    ensure(is_special(&g), || format!("{name} is not special"))?;
    check_tight_knot(&medial(&g)?, v, name)?;
    Ok(g)
}

/// A tight lune-free knot shadow with `v` crossings.
///
/// These exist exactly for `v ≥ 8` with `v ≢ ±1 (mod 6)` and `v ≠ 12`. For
/// `v ≡ 2, 4 (mod 6)` the result is the medial of the wheel `W_{v/2}`;
/// for `v ≡ 0, 3 (mod 6)` it is the medial of a stored base laddered
/// `(v − b) / 12` times, with `b ∈ {9, 15, 18, 24}` and `b ≡ v (mod 12)`.
pub fn tight_knot_graph(v: usize) -> Result<Universe, ConstructionError> {
    let unrealizable = |reason| Err(ConstructionError::Unrealizable { v, reason });
    if v < 8 {
        return unrealizable(UnrealizableReason::TooSmall);
    }
    if v % 6 == 1 || v % 6 == 5 {
        return unrealizable(UnrealizableReason::Residue(v % 6));
    }
    if v == 12 {
        return unrealizable(UnrealizableReason::Twelve);
    }
    let u = if v % 6 == 2 || v % 6 == 4 {
        medial(&wheel(v / 2)?)?
    } else {
        let base = match v % 12 {
            9 => 9,
            3 => 15,
            6 => 18,
            _ => 24,
        };
        let mut g = figure25(base)?;
        for _ in 0..(v - base) / 12 {
            let (c, site) = canonical_site(&g)?;
            g = ladder(&c, site)?;
        }
        medial(&g)?
    };
    check_tight_knot(&u, v, "tight knot shadow")?;
    Ok(u)
}
