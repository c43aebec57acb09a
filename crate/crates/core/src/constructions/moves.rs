//! Local rewrites of universes.
//!
//! Face cycles are orbits of `phi = sigma ∘ alpha` with `sigma`
//! counterclockwise, so walking a cycle keeps the face on the right: the
//! walk goes clockwise around the face. A new vertex dropped inside a face
//! therefore sees the face's boundary in the reverse of cycle order.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::knot_graph::{as_universe, strand_orbits, FaceCensus, Universe};
use crate::planar_map::{Dart, PlanarMap};

use super::data::load;

use super::{check_lune_free, ensure, ConstructionError, RewriteSite, Surgery};

/// Expected census after adding `delta[f]` to the degree of each listed face
/// and appending `extra` new faces.
fn census_after(map: &PlanarMap, delta: &BTreeMap<usize, isize>, extra: &[usize], split: Option<(usize, [usize; 2])>) -> FaceCensus {
    let faces = map.faces();
    let mut degrees: Vec<usize> = Vec::new();
    for f in 0..faces.len() {
        if split.is_some_and(|(g, _)| g == f) {
            continue;
        }
        let d = faces.degree(f) as isize + delta.get(&f).copied().unwrap_or(0);
        degrees.push(d as usize);
    }
    if let Some((_, parts)) = split {
        degrees.extend(parts);
    }
    degrees.extend(extra);
    let mut counts = BTreeMap::new();
    for d in degrees {
        *counts.entry(d).or_insert(0) += 1;
    }
    FaceCensus { counts }
}

/// Two darts on one face whose edges have four distinct endpoints. Returns
/// the face and the number of darts strictly between them along the cycle.
fn face_edge_pair(map: &PlanarMap, d1: Dart, d2: Dart) -> Result<(usize, usize, usize), ConstructionError> {
    let faces = map.faces();
    let f = faces.face_of[d1];
    if faces.face_of[d2] != f {
        return Err(ConstructionError::BadSite(format!("darts {d1} and {d2} lie on different faces")));
    }
    let ends = [
        map.vertex_of(d1),
        map.vertex_of(map.alpha(d1)),
        map.vertex_of(d2),
        map.vertex_of(map.alpha(d2)),
    ];
    for i in 0..4 {
        for j in i + 1..4 {
            if ends[i] == ends[j] {
                return Err(ConstructionError::BadSite(format!(
                    "edges of darts {d1} and {d2} share or repeat an endpoint"
                )));
            }
        }
    }
    let cycle = &faces.cycles[f];
    let i1 = cycle.iter().position(|&x| x == d1).unwrap();
    let i2 = cycle.iter().position(|&x| x == d2).unwrap();
    let between = (i2 + cycle.len() - i1) % cycle.len() - 1;
    Ok((f, cycle.len(), between))
}

/// All unordered pairs of non-adjacent edges sharing a face, as dart pairs
/// in increasing order.
fn face_edge_pairs(map: &PlanarMap) -> Vec<(Dart, Dart)> {
    let mut out = Vec::new();
    for cycle in map.faces().cycles {
        for (i, &d1) in cycle.iter().enumerate() {
            for &d2 in &cycle[i + 1..] {
                if face_edge_pair(map, d1, d2).is_ok() {
                    out.push((d1.min(d2), d1.max(d2)));
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Removes edges `ab` and `cd` of a face and puts a new crossing inside the
/// face joined to `a`, `b`, `c`, `d`. The strands `a–b` and `c–d` become
/// `a–c` and `b–d`, so the strand count may change.
pub fn crossing_device(u: &Universe, site: RewriteSite) -> Result<Universe, ConstructionError> {
    let map = u.map();
    site.check(map)?;
    let RewriteSite::FaceEdgePair(d1, d2) = site else {
        return Err(ConstructionError::BadSite("crossing device needs a face edge pair".into()));
    };
    let (f, len, between) = face_edge_pair(map, d1, d2)?;
    let mut s = Surgery::new(map);
    let [xa, xb, xc, xd] = [s.fresh(), s.fresh(), s.fresh(), s.fresh()];
    s.set(map, d1, xa);
    s.set(map, map.alpha(d1), xb);
    s.set(map, d2, xc);
    s.set(map, map.alpha(d2), xd);
    s.push_vertex(vec![xa, xd, xc, xb]);
    let out = s.universe()?;

    let faces = map.faces();
    let mut delta = BTreeMap::new();
    *delta.entry(faces.face_of[map.alpha(d1)]).or_insert(0) += 1;
    *delta.entry(faces.face_of[map.alpha(d2)]).or_insert(0) += 1;
    let expected = census_after(map, &delta, &[], Some((f, [between + 2, len - between])));
    ensure(out.face_census() == expected, || {
        format!("crossing device census {} != {}", out.face_census(), expected)
    })?;
    ensure(out.v() == u.v() + 1, || "crossing device must add one vertex".into())?;
    if u.is_lune_free() {
        check_lune_free(&out, "crossing device output")?;
    }
    Ok(out)
}

/// Every site where [`crossing_device`] applies.
pub fn crossing_device_sites(u: &Universe) -> Vec<RewriteSite> {
    face_edge_pairs(u.map())
        .into_iter()
        .map(|(a, b)| RewriteSite::FaceEdgePair(a, b))
        .collect()
}

/// The two-vertex move across an edge `xy` whose flanking faces both have
/// at least four sides. The flanking faces lose a side, the four faces at
/// the corners of the edge gain one, and two triangles appear.
pub fn double_move(u: &Universe, site: RewriteSite) -> Result<Universe, ConstructionError> {
    let map = u.map();
    site.check(map)?;
    let RewriteSite::Edge(d) = site else {
        return Err(ConstructionError::BadSite("the double move needs an edge".into()));
    };
    let faces = map.faces();
    let da = map.alpha(d);
    let (left, right) = (faces.degree(faces.face_of[d]), faces.degree(faces.face_of[da]));
    if left < 4 || right < 4 {
        return Err(ConstructionError::InadmissibleSite { dart: d, left, right });
    }
    if map.vertex_of(d) == map.vertex_of(da) {
        return Err(ConstructionError::BadSite(format!("dart {d} lies on a loop")));
    }
    let x = map.vertex_of(d);
    let y = map.vertex_of(da);
    let sg = |z: Dart, n: usize| (0..n).fold(z, |acc, _| map.sigma(acc));

    let mut s = Surgery::new(map);
    let lab = |z: Dart| s.label(map, z);
    let (up1, left1, down1) = (lab(sg(d, 1)), lab(sg(d, 2)), lab(sg(d, 3)));
    let (down2, right2, up2) = (lab(sg(da, 1)), lab(sg(da, 2)), lab(sg(da, 3)));
    let [tp, tq, ps, pq, qs] = [s.fresh(), s.fresh(), s.fresh(), s.fresh(), s.fresh()];
    s.rot[x] = vec![up2, up1, tp, tq];
    s.rot[y] = vec![qs, ps, down1, down2];
    s.push_vertex(vec![left1, ps, pq, tp]);
    s.push_vertex(vec![pq, qs, right2, tq]);
    let out = s.universe()?;

    let mut delta = BTreeMap::new();
    for z in [d, da] {
        *delta.entry(faces.face_of[z]).or_insert(0) -= 1;
    }
    for z in [sg(d, 2), sg(d, 3), sg(da, 2), sg(da, 3)] {
        *delta.entry(faces.face_of[z]).or_insert(0) += 1;
    }
    let expected = census_after(map, &delta, &[3, 3], None);
    ensure(out.face_census() == expected, || {
        format!("double move census {} != {}", out.face_census(), expected)
    })?;
    ensure(out.strand_count() == u.strand_count(), || "double move changed the strand count".into())?;
    if u.is_lune_free() {
        check_lune_free(&out, "double move output")?;
    }
    Ok(out)
}

/// Pushes the edge of `e1` across a face and over the edge of `e2`: two new
/// crossings, one new lune, strands unchanged.
pub fn reidemeister_two(u: &Universe, site: RewriteSite) -> Result<Universe, ConstructionError> {
    let map = u.map();
    site.check(map)?;
    let RewriteSite::FaceEdgePair(e2, e1) = site else {
        return Err(ConstructionError::BadSite("the lune move needs a face edge pair".into()));
    };
    let (f, len, between) = face_edge_pair(map, e2, e1)?;
    // e2 runs c→d and e1 runs a→b along the face; y1 lands near d, y2 near c
    let mut s = Surgery::new(map);
    let [y1a, y1d, y2b, y2c, m1, m2] = [s.fresh(), s.fresh(), s.fresh(), s.fresh(), s.fresh(), s.fresh()];
    s.set(map, e1, y1a);
    s.set(map, map.alpha(e1), y2b);
    s.set(map, e2, y2c);
    s.set(map, map.alpha(e2), y1d);
    s.push_vertex(vec![y1d, m1, m2, y1a]);
    s.push_vertex(vec![m2, m1, y2c, y2b]);
    let out = s.universe()?;

    let faces = map.faces();
    let mut delta = BTreeMap::new();
    *delta.entry(faces.face_of[map.alpha(e1)]).or_insert(0) += 2;
    *delta.entry(faces.face_of[map.alpha(e2)]).or_insert(0) += 2;
    let expected = census_after(map, &delta, &[2], Some((f, [between + 2, len - between])));
    ensure(out.face_census() == expected, || {
        format!("lune move census {} != {}", out.face_census(), expected)
    })?;
    ensure(out.strand_count() == u.strand_count(), || "lune move changed the strand count".into())?;
    Ok(out)
}

pub fn reidemeister_two_sites(u: &Universe) -> Vec<RewriteSite> {
    face_edge_pairs(u.map())
        .into_iter()
        .map(|(a, b)| RewriteSite::FaceEdgePair(a, b))
        .collect()
}

/// A ten-crossing tangle: a two-component link shadow with one crossing
/// between the components removed, so each strand of the tangle joins two
/// opposite legs.
struct Tangle {
    rot: Vec<Vec<u32>>,
    /// (vertex, slot in rotation) of each leg, in the rotation order of the
    /// removed crossing.
    legs: [(usize, usize); 4],
}

/// Index of the removed crossing in the shipped tangle file.
const TANGLE_HUB: usize = 10;

fn tangle() -> &'static Tangle {
    static TANGLE: OnceLock<Tangle> = OnceLock::new();
    TANGLE.get_or_init(|| {
        let map = load("tangle_11").expect("shipped tangle parses");
        let u = as_universe(map).expect("shipped tangle is a universe");
        let map = u.map();
        assert_eq!((u.v(), u.strand_count()), (11, 2), "shipped tangle shape");
        let hub = map.darts_of(TANGLE_HUB).start;
        let orbits = strand_orbits(map);
        let through = orbits.iter().find(|o| o.contains(&hub)).expect("every dart lies on a strand");
        assert!(
            !through.contains(&(hub + 1)) && !through.contains(&(hub + 3)),
            "shipped tangle hub must cross two different components"
        );
        let legs = [0, 1, 2, 3].map(|j| {
            let end = map.alpha(hub + j);
            let v = map.vertex_of(end);
            (v, end - map.darts_of(v).start)
        });
        let mut rot = map.rotations();
        rot.truncate(TANGLE_HUB);
        Tangle { rot, legs }
    })
}

/// Replaces one crossing by a ten-crossing tangle whose strands run straight
/// through, adding nine vertices. Needs no admissibility.
pub fn plus_nine(u: &Universe, site: RewriteSite) -> Result<Universe, ConstructionError> {
    let map = u.map();
    site.check(map)?;
    let RewriteSite::Vertex(x0) = site else {
        return Err(ConstructionError::BadSite("the nine-crossing insertion needs a vertex".into()));
    };
    let x = map.vertex_of(x0);
    if map.darts_of(x).any(|z| map.vertex_of(map.alpha(z)) == x) {
        return Err(ConstructionError::BadSite(format!("vertex {x} carries a loop")));
    }
    let t = tangle();
    let mut s = Surgery::new(map);
    let legs: Vec<u32> = (0..4).map(|i| s.label(map, (0..i).fold(x0, |z, _| map.sigma(z)))).collect();
    s.remove_vertex(x);
    let shift = s.fresh();
    let base = s.rot.len();
    let top = t.rot.iter().flatten().copied().max().unwrap_or(0);
    for _ in 0..top {
        s.fresh();
    }
    for r in &t.rot {
        s.push_vertex(r.iter().map(|l| l + shift).collect());
    }
    // the tangle disk sees the removed crossing's rotation reversed
    for (j, &(v, slot)) in t.legs.iter().enumerate() {
        s.rot[base + v][slot] = legs[(4 - j) % 4];
    }
    let out = s.universe()?;
    ensure(out.v() == u.v() + 9, || "nine-crossing insertion must add nine vertices".into())?;
    ensure(out.strand_count() == u.strand_count(), || {
        format!(
            "nine-crossing insertion changed the strand count from {} to {}",
            u.strand_count(),
            out.strand_count()
        )
    })?;
    if u.is_lune_free() {
        check_lune_free(&out, "nine-crossing insertion output")?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{g8, knot_library, venn};
    use crate::planar_map::isomorphic;

    #[test]
    fn double_move_rejects_venn() {
        let v = venn();
        for d in 0..v.map().dart_count() {
            assert!(matches!(
                double_move(&v, RewriteSite::Edge(d)),
                Err(ConstructionError::InadmissibleSite { left: 3, right: 3, .. })
            ));
        }
    }

    #[test]
    fn double_move_on_every_admissible_edge() {
        let eleven = &knot_library(11)[0];
        let edges: Vec<_> = eleven.admissible_edges().collect();
        assert!(!edges.is_empty());
        for d in edges {
            let out = double_move(eleven, RewriteSite::Edge(d)).unwrap();
            assert_eq!(out.v(), 13);
            assert!(out.is_lune_free());
            assert_eq!(out.is_admissible(), Ok(true));
            assert_eq!(out.strand_count(), 1);
        }
    }

    #[test]
    fn crossing_device_from_eight_reaches_nine() {
        let eight = g8();
        let nine = &knot_library(9)[0];
        let hits = crossing_device_sites(&eight)
            .into_iter()
            .filter_map(|s| crossing_device(&eight, s).ok())
            .filter(|out| isomorphic(out.map(), nine.map()))
            .count();
        assert!(hits > 0);
    }

    #[test]
    fn crossing_device_from_ten_reaches_an_eleven_knot() {
        let ten = &knot_library(10)[0];
        let eleven = &knot_library(11)[0];
        let knots: Vec<_> = crossing_device_sites(ten)
            .into_iter()
            .filter_map(|s| crossing_device(ten, s).ok())
            .filter(|out| out.is_lune_free() && out.is_knot_graph())
            .collect();
        assert!(!knots.is_empty());
        assert!(knots.iter().all(|k| isomorphic(k.map(), eleven.map())));
    }

    #[test]
    fn crossing_device_can_change_strand_count() {
        let mut changed = false;
        for u in (8..=12).flat_map(knot_library).chain([venn()]) {
            for s in crossing_device_sites(&u) {
                let out = crossing_device(&u, s).unwrap();
                assert!(out.is_lune_free());
                changed |= out.strand_count() != u.strand_count();
            }
        }
        assert!(changed);
    }

    #[test]
    fn bad_sites() {
        let v = venn();
        assert!(matches!(crossing_device(&v, RewriteSite::Edge(0)), Err(ConstructionError::BadSite(_))));
        assert!(matches!(plus_nine(&v, RewriteSite::Vertex(999)), Err(ConstructionError::BadSite(_))));
        // darts 0 and 1 share vertex 0
        assert!(matches!(
            crossing_device(&v, RewriteSite::FaceEdgePair(0, 1)),
            Err(ConstructionError::BadSite(_))
        ));
    }

    #[test]
    fn plus_nine_examples() {
        let out = plus_nine(&g8(), RewriteSite::Vertex(0)).unwrap();
        assert_eq!(out.v(), 17);
        assert!(out.is_lune_free() && out.is_knot_graph());
        let out = plus_nine(&venn(), RewriteSite::Vertex(0)).unwrap();
        assert_eq!(out.v(), 15);
        assert_eq!(out.strand_count(), 3);
        assert_eq!(out.face_census().triangle_excess(), 0);
    }

    #[test]
    fn plus_nine_at_every_dart_of_a_multigraph() {
        let trefoil = crate::constructions::polygon_family(3, 1).unwrap();
        for d in 0..trefoil.map().dart_count() {
            let out = plus_nine(&trefoil, RewriteSite::Vertex(d)).unwrap();
            assert_eq!(out.v(), 12);
            assert_eq!(out.strand_count(), 1);
        }
    }

    #[test]
    fn lune_move_adds_one_lune() {
        let ten = &knot_library(10)[0];
        let sites = reidemeister_two_sites(ten);
        assert!(!sites.is_empty());
        for s in sites {
            let out = reidemeister_two(ten, s).unwrap();
            assert_eq!(out.v(), 12);
            assert_eq!(out.lune_count(), 1);
            assert!(out.is_knot_graph());
            assert_eq!(out.face_census().general_excess(), 0);
        }
    }
}
