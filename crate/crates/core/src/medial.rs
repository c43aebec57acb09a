//! Medial graphs and the special-graph classification.
//!
//! The medial of a plane graph `G` has one vertex per edge of `G` and one
//! edge per corner of `G`: the corner between darts `x` and `sigma(x)` joins
//! the medial vertices of their edges. Strands of the medial run across the
//! edges of `G`, so each strand is a cycle of corners.

use thiserror::Error;

use crate::knot_graph::{as_universe, Universe, UniverseError};
use crate::planar_map::{build_map, Dart, MapError, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MedialError {
    #[error("the medial construction needs at least 2 edges, got {0}")]
    TooSmall(usize),
    #[error("the face coloring is not proper")]
    ImproperColoring,
    #[error("wheel size must be at least 3, got {0}")]
    BadSize(usize),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Universe(#[from] UniverseError),
}

/// A connected genus-0 map viewed as a plane graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    map: PlanarMap,
}

impl PlaneGraph {
    pub fn new(map: PlanarMap) -> Result<Self, MapError> {
        map.require_sphere()?;
        Ok(PlaneGraph { map })
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn into_map(self) -> PlanarMap {
        self.map
    }

    pub fn dual(&self) -> PlaneGraph {
        PlaneGraph {
            map: self.map.dual().expect("plane graphs are connected and genus 0"),
        }
    }
}

/// A black/white coloring of faces, indexed like [`PlanarMap::faces`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceColoring {
    pub black: Vec<bool>,
}

impl FaceColoring {
    pub fn swapped(&self) -> FaceColoring {
        FaceColoring {
            black: self.black.iter().map(|b| !b).collect(),
        }
    }

    pub fn black_count(&self) -> usize {
        self.black.iter().filter(|&&b| b).count()
    }

    /// The two faces flanking every edge get different colors.
    pub fn is_proper_for(&self, map: &PlanarMap) -> bool {
        let faces = map.faces();
        self.black.len() == faces.len()
            && (0..map.dart_count()).all(|d| {
                self.black[faces.face_of[d]] != self.black[faces.face_of[map.alpha(d)]]
            })
    }
}

/// Angles are corners: the angle at dart `x` sits between `x` and `sigma(x)`
/// at `vertex_of(x)`, inside the face containing `sigma(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleGraph {
    pub angles: Vec<(usize, usize)>,
    /// The two neighbours of each angle: across its own edge, and across the
    /// edge of `sigma(x)`.
    pub succ: Vec<[Dart; 2]>,
}

impl AngleGraph {
    pub fn components(&self) -> usize {
        let n = self.succ.len();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(a) = stack.pop() {
                for &b in &self.succ[a] {
                    if !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        count
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialTag {
    Cubic,
    Triangulation,
    Wheel,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpecialClass {
    pub tag: SpecialTag,
    pub wheel_size: Option<usize>,
    pub cubic: bool,
    pub triangulation: bool,
    pub wheel: bool,
}

/// The medial universe. Vertex `i` of the result sits on edge `i` of `G`;
/// medial edges are labelled by the dart opening their corner.
pub fn medial(g: &PlaneGraph) -> Result<Universe, MedialError> {
    let m = &g.map;
    if m.edge_count() < 2 {
        return Err(MedialError::TooSmall(m.edge_count()));
    }
    let rotations: Vec<Vec<u32>> = (0..m.edge_count())
        .map(|e| {
            let d = m.edge_dart(e);
            let a = m.alpha(d);
            [m.sigma_inv(a), d, m.sigma_inv(d), a]
                .map(|x| x as u32)
                .to_vec()
        })
        .collect();
    Ok(as_universe(build_map(&rotations)?)?)
}

/// The checkerboard coloring with the face of dart 0 black.
pub fn checkerboard(u: &Universe) -> FaceColoring {
    let map = u.map();
    let faces = map.faces();
    let mut color: Vec<Option<bool>> = vec![None; faces.len()];
    color[faces.face_of[0]] = Some(true);
    let mut stack = vec![faces.face_of[0]];
    while let Some(f) = stack.pop() {
        let c = color[f].unwrap();
        for &d in &faces.cycles[f] {
            let other = faces.face_of[map.alpha(d)];
            match color[other] {
                None => {
                    color[other] = Some(!c);
                    stack.push(other);
                }
                Some(oc) => debug_assert_ne!(oc, c, "even-degree plane maps are 2-face-colorable"),
            }
        }
    }
    FaceColoring {
        black: color.into_iter().map(|c| c.unwrap()).collect(),
    }
}

/// Inverse of the medial: vertices are the black faces, and each vertex of
/// `U` becomes an edge between the black faces at its two black corners.
pub fn premedial(u: &Universe, coloring: &FaceColoring) -> Result<PlaneGraph, MedialError> {
    let map = u.map();
    if !coloring.is_proper_for(map) {
        return Err(MedialError::ImproperColoring);
    }
    let rotations: Vec<Vec<u32>> = map
        .faces()
        .cycles
        .iter()
        .enumerate()
        .filter(|(f, _)| coloring.black[*f])
        .map(|(_, cycle)| cycle.iter().map(|&z| map.vertex_of(z) as u32).collect())
        .collect();
    Ok(PlaneGraph::new(build_map(&rotations)?)?)
}

pub fn premedial_default(u: &Universe) -> PlaneGraph {
    premedial(u, &checkerboard(u)).expect("checkerboard colorings are proper")
}

pub fn angle_graph(g: &PlaneGraph) -> AngleGraph {
    let m = &g.map;
    let faces = m.faces();
    let angles = (0..m.dart_count())
        .map(|x| (m.vertex_of(x), faces.face_of[m.sigma(x)]))
        .collect();
    let succ = (0..m.dart_count())
        .map(|x| [m.alpha(x), m.sigma_inv(m.alpha(m.sigma(x)))])
        .collect();
    AngleGraph { angles, succ }
}

pub fn angle_components(g: &PlaneGraph) -> usize {
    angle_graph(g).components()
}

/// All vertex and face degrees are at least 3, and at every corner either
/// the vertex or the face has degree exactly 3.
pub fn is_special(g: &PlaneGraph) -> bool {
    let m = &g.map;
    let faces = m.faces();
    if m.degrees().any(|d| d < 3) || faces.cycles.iter().any(|c| c.len() < 3) {
        return false;
    }
    (0..m.dart_count()).all(|x| {
        m.degree(m.vertex_of(x)) == 3 || faces.degree(faces.face_of[m.sigma(x)]) == 3
    })
}

/// Detects the three special families directly from degree structure.
pub fn classify_special(g: &PlaneGraph) -> SpecialClass {
    let m = &g.map;
    let faces = m.faces();
    let face_degrees: Vec<usize> = faces.cycles.iter().map(Vec::len).collect();
    let cubic = m.degrees().all(|d| d == 3) && face_degrees.iter().all(|&d| d >= 3);
    let triangulation = face_degrees.iter().all(|&d| d == 3) && m.degrees().all(|d| d >= 3);
    let wheel_size = detect_wheel(m);
    let tag = if wheel_size.is_some() {
        SpecialTag::Wheel
    } else if cubic {
        SpecialTag::Cubic
    } else if triangulation {
        SpecialTag::Triangulation
    } else {
        SpecialTag::Other
    };
    SpecialClass {
        tag,
        wheel_size,
        cubic,
        triangulation,
        wheel: wheel_size.is_some(),
    }
}

fn detect_wheel(m: &PlanarMap) -> Option<usize> {
    let v = m.vertex_count();
    if v < 4 || m.edge_count() != 2 * (v - 1) {
        return None;
    }
    let n = v - 1;
    let hub = (0..v).find(|&h| {
        m.degree(h) == n && (0..v).all(|w| w == h || m.degree(w) == 3)
    })?;
    let mut spokes: Vec<usize> = m.neighbors(hub).collect();
    spokes.sort_unstable();
    spokes.dedup();
    if spokes.len() != n || spokes.contains(&hub) {
        return None;
    }
    // rim edges avoid the hub and must form one cycle through every rim vertex
    let mut rim_adj = vec![Vec::new(); v];
    for e in 0..m.edge_count() {
        let (a, b) = m.endpoints(e);
        if a != hub && b != hub {
            if a == b {
                return None;
            }
            rim_adj[a].push(b);
            rim_adj[b].push(a);
        }
    }
    let start = spokes[0];
    let (mut prev, mut cur, mut steps) = (start, *rim_adj[start].first()?, 1);
    while cur != start {
        let next = rim_adj[cur].iter().copied().find(|&w| w != prev)?;
        prev = cur;
        cur = next;
        steps += 1;
        if steps > n {
            return None;
        }
    }
    if steps != n {
        return None;
    }
    let mut face_degrees: Vec<usize> = m.faces().cycles.iter().map(Vec::len).collect();
    face_degrees.sort_unstable();
    let mut expected = vec![3; n];
    expected.push(n);
    expected.sort_unstable();
    (face_degrees == expected).then_some(n)
}

/// The wheel `W_n`: hub 0 joined to rim vertices `1..=n` forming a cycle.
pub fn wheel(n: usize) -> Result<PlaneGraph, MedialError> {
    if n < 3 {
        return Err(MedialError::BadSize(n));
    }
    let spoke = |i: usize| (i - 1) as u32;
    let rim = |i: usize| (n + (i - 1) % n) as u32; // edge between rim i and i+1
    let mut rotations = vec![(1..=n).map(spoke).collect::<Vec<_>>()];
    for i in 1..=n {
        let before = if i == 1 { n } else { i - 1 };
        rotations.push(vec![spoke(i), rim(before), rim(i)]);
    }
    Ok(PlaneGraph::new(build_map(&rotations)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{canonical_code, fixtures, isomorphic};

    fn plane(m: PlanarMap) -> PlaneGraph {
        PlaneGraph::new(m).unwrap()
    }

    #[test]
    fn wheel_shape() {
        let w4 = wheel(4).unwrap();
        assert_eq!((w4.map().vertex_count(), w4.map().edge_count()), (5, 8));
        for n in 3..9 {
            let w = wheel(n).unwrap();
            let c = classify_special(&w);
            assert_eq!(c.tag, SpecialTag::Wheel);
            assert_eq!(c.wheel_size, Some(n));
            assert!(is_special(&w));
        }
        assert!(isomorphic(wheel(3).unwrap().map(), &fixtures::tetrahedron()));
        assert_eq!(wheel(2), Err(MedialError::BadSize(2)));
    }

    #[test]
    fn k4_flags_all_three_classes() {
        let c = classify_special(&wheel(3).unwrap());
        assert!(c.cubic && c.triangulation && c.wheel);
        assert_eq!(c.tag, SpecialTag::Wheel);
    }

    #[test]
    fn medial_of_k4_is_venn() {
        let u = medial(&wheel(3).unwrap()).unwrap();
        assert!(isomorphic(u.map(), &fixtures::octahedron()));
        assert_eq!(u.strand_count(), 3);
    }

    #[test]
    fn medial_of_wheels() {
        for n in 3..10 {
            let w = wheel(n).unwrap();
            let u = medial(&w).unwrap();
            assert_eq!(u.v(), 2 * n);
            assert!(u.is_lune_free());
            assert_eq!(u.is_tight(), Ok(true));
            let expected_mu = if n % 3 == 0 { 3 } else { 1 };
            assert_eq!(u.strand_count(), expected_mu, "W{n}");
            assert_eq!(angle_components(&w), expected_mu);
        }
    }

    #[test]
    fn medial_of_dual_matches() {
        for n in 3..8 {
            let w = wheel(n).unwrap();
            let a = medial(&w).unwrap();
            let b = medial(&w.dual()).unwrap();
            assert!(isomorphic(a.map(), b.map()));
        }
        let cube = plane(fixtures::octahedron().dual().unwrap());
        assert!(isomorphic(
            medial(&cube).unwrap().map(),
            medial(&cube.dual()).unwrap().map()
        ));
    }

    #[test]
    fn medial_needs_two_edges() {
        let single = plane(build_map(&[vec![0], vec![0]]).unwrap());
        assert_eq!(medial(&single), Err(MedialError::TooSmall(1)));
    }

    #[test]
    fn venn_checkerboard_and_premedial() {
        let venn = medial(&wheel(3).unwrap()).unwrap();
        let c = checkerboard(&venn);
        assert!(c.is_proper_for(venn.map()));
        assert_eq!(c.black_count(), 4);
        let g = premedial(&venn, &c).unwrap();
        assert!(isomorphic(g.map(), wheel(3).unwrap().map()));
        let h = premedial(&venn, &c.swapped()).unwrap();
        assert!(isomorphic(h.map(), wheel(3).unwrap().map()));
    }

    #[test]
    fn premedial_round_trip_keeps_orientation() {
        for n in 3..8 {
            let u = medial(&wheel(n).unwrap()).unwrap();
            for coloring in [checkerboard(&u), checkerboard(&u).swapped()] {
                let g = premedial(&u, &coloring).unwrap();
                let back = medial(&g).unwrap();
                assert_eq!(canonical_code(back.map(), false), canonical_code(u.map(), false));
                let w = wheel(n).unwrap();
                assert!(isomorphic(g.map(), w.map()) || isomorphic(g.map(), w.dual().map()));
            }
        }
    }

    #[test]
    fn improper_coloring_is_rejected() {
        let u = medial(&wheel(4).unwrap()).unwrap();
        let mut c = checkerboard(&u);
        c.black[0] = !c.black[0];
        assert_eq!(premedial(&u, &c), Err(MedialError::ImproperColoring));
    }

    #[test]
    fn special_examples() {
        let cube = plane(fixtures::octahedron().dual().unwrap());
        assert!(is_special(&cube));
        assert_eq!(classify_special(&cube).tag, SpecialTag::Cubic);
        let octa = plane(fixtures::octahedron());
        assert_eq!(classify_special(&octa).tag, SpecialTag::Triangulation);
        let path = plane(build_map(&[vec![0], vec![0, 1], vec![1]]).unwrap());
        assert!(!is_special(&path));
        assert_eq!(classify_special(&path).tag, SpecialTag::Other);
        assert!(is_special(&wheel(6).unwrap()));
    }

    #[test]
    fn subdivided_wheel_is_other() {
        // W5 with rim edge (1,2) subdivided by vertex 6
        let w = wheel(5).unwrap();
        let mut rot = w.map().rotations();
        // rim edge between 1 and 2 has label 5
        for r in rot.iter_mut().skip(1).take(2) {
            for l in r.iter_mut() {
                if *l == 5 {
                    *l = 100;
                }
            }
        }
        // vertex 1 keeps 100, vertex 2 gets 101, new vertex joins them
        for l in rot[2].iter_mut() {
            if *l == 100 {
                *l = 101;
            }
        }
        rot.push(vec![100, 101]);
        let g = plane(build_map(&rot).unwrap());
        assert!(!is_special(&g));
        assert_eq!(classify_special(&g).tag, SpecialTag::Other);
    }

    #[test]
    fn angle_graph_is_two_regular() {
        let g = wheel(5).unwrap();
        let a = angle_graph(&g);
        assert_eq!(a.angles.len(), 2 * g.map().edge_count());
        for (x, [p, q]) in a.succ.iter().enumerate() {
            assert!(a.succ[*p].contains(&x));
            assert!(a.succ[*q].contains(&x));
        }
    }

    #[test]
    fn k4_angle_components() {
        assert_eq!(angle_components(&wheel(3).unwrap()), 3);
        assert_eq!(angle_components(&wheel(4).unwrap()), 1);
        let w6 = wheel(6).unwrap();
        assert_eq!(angle_components(&w6), 3);
        assert_eq!(medial(&w6).unwrap().strand_count(), 3);
    }
}
