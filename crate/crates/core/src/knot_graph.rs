//! Universes: 4-regular connected sphere maps, i.e. knot and link shadows.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::planar_map::{MapError, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniverseError {
    #[error("vertex {vertex} has degree {degree}, expected 4")]
    NotFourRegular { vertex: usize, degree: usize },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("the universe has a loop or a multiple edge")]
    NotLuneFree,
}

/// A validated 4-regular, connected, genus-0 map.
#[derive(Debug, Clone)]
pub struct Universe {
    map: PlanarMap,
    mu: OnceLock<usize>,
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map
    }
}

impl Eq for Universe {}

/// Face counts by degree: `counts[k] = f_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceCensus {
    pub counts: BTreeMap<usize, usize>,
}

impl FaceCensus {
    pub fn of(map: &PlanarMap) -> Self {
        let mut counts = BTreeMap::new();
        for cycle in map.faces().cycles {
            *counts.entry(cycle.len()).or_insert(0) += 1;
        }
        FaceCensus { counts }
    }

    pub fn get(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    pub fn faces(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn degree_sum(&self) -> usize {
        self.counts.iter().map(|(k, f)| k * f).sum()
    }

    /// `f3 - 8 - Σ_{k≥5} (k-4) f_k`; zero for every lune-free universe.
    pub fn triangle_excess(&self) -> i64 {
        let tail: i64 = self
            .counts
            .iter()
            .filter(|(&k, _)| k >= 5)
            .map(|(&k, &f)| (k as i64 - 4) * f as i64)
            .sum();
        self.get(3) as i64 - 8 - tail
    }

    /// `3 f1 + 2 f2 + f3 - 8 - Σ_{k≥5} (k-4) f_k`; zero for every universe.
    pub fn general_excess(&self) -> i64 {
        3 * self.get(1) as i64 + 2 * self.get(2) as i64 + self.triangle_excess()
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        FaceCensus {
            counts: pairs.iter().copied().filter(|&(_, f)| f > 0).collect(),
        }
    }
}

impl fmt::Display for FaceCensus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (k, n)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}:{n}")?;
        }
        write!(f, "}}")
    }
}

pub fn as_universe(map: PlanarMap) -> Result<Universe, UniverseError> {
    for v in 0..map.vertex_count() {
        let degree = map.degree(v);
        if degree != 4 {
            return Err(UniverseError::NotFourRegular { vertex: v, degree });
        }
    }
    map.require_sphere()?;
    Ok(Universe {
        map,
        mu: OnceLock::new(),
    })
}

impl Universe {
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn into_map(self) -> PlanarMap {
        self.map
    }

    pub fn v(&self) -> usize {
        self.map.vertex_count()
    }

    pub fn e(&self) -> usize {
        self.map.edge_count()
    }

    pub fn f(&self) -> usize {
        self.map.face_count()
    }

    pub fn face_census(&self) -> FaceCensus {
        FaceCensus::of(&self.map)
    }

    /// Number of straight-ahead circuits (link components).
    ///
    /// Orbits of `d ↦ alpha(sigma²(d))` trace each circuit once per
    /// direction, so the orbit count is halved.
    pub fn strand_count(&self) -> usize {
        *self.mu.get_or_init(|| strand_orbits(&self.map).len() / 2)
    }

    pub fn is_knot_graph(&self) -> bool {
        self.strand_count() == 1
    }

    /// Faces of degree two.
    pub fn lune_count(&self) -> usize {
        self.face_census().get(2)
    }

    pub fn is_lune_free(&self) -> bool {
        let simple = self.map.is_simple();
        if simple {
            let census = self.face_census();
            assert!(
                census.get(1) == 0 && census.get(2) == 0,
                "simple universe with a face of degree < 3"
            );
        }
        simple
    }

    fn require_lune_free(&self) -> Result<(), UniverseError> {
        if self.is_lune_free() {
            Ok(())
        } else {
            Err(UniverseError::NotLuneFree)
        }
    }

    /// Some edge is flanked by two faces of degree at least four.
    pub fn is_admissible(&self) -> Result<bool, UniverseError> {
        self.require_lune_free()?;
        Ok(self.admissible_edges().next().is_some())
    }

    /// Every edge has a flanking face of degree exactly three.
    pub fn is_tight(&self) -> Result<bool, UniverseError> {
        self.require_lune_free()?;
        let faces = self.map.faces();
        let deg = |d| faces.degree(faces.face_of[d]);
        Ok((0..self.e()).all(|e| {
            let d = self.map.edge_dart(e);
            deg(d) == 3 || deg(self.map.alpha(d)) == 3
        }))
    }

    /// Edge darts whose two flanking faces both have degree ≥ 4, in dart order.
    pub fn admissible_edges(&self) -> impl Iterator<Item = usize> + '_ {
        let faces = self.map.faces();
        (0..self.map.dart_count()).filter(move |&d| {
            let a = self.map.alpha(d);
            d < a && faces.degree(faces.face_of[d]) >= 4 && faces.degree(faces.face_of[a]) >= 4
        })
    }
}

/// The orbits of `d ↦ alpha(sigma²(d))` on a 4-regular map.
pub fn strand_orbits(map: &PlanarMap) -> Vec<Vec<usize>> {
    let n = map.dart_count();
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            orbit.push(d);
            d = map.alpha(map.sigma(map.sigma(d)));
        }
        orbits.push(orbit);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::build_map;

    fn venn() -> Universe {
        as_universe(crate::planar_map::fixtures::octahedron()).unwrap()
    }

    /// Trefoil shadow: a triangle with every side doubled.
    pub(crate) fn trefoil() -> Universe {
        // vertices 0,1,2; edges a_i (outer) and b_i (inner) join i and i+1
        // outer: 0,1,2  inner: 3,4,5
        as_universe(
            build_map(&[vec![0, 3, 5, 2], vec![1, 4, 3, 0], vec![2, 5, 4, 1]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn venn_census() {
        let u = venn();
        assert_eq!(u.v(), 6);
        assert_eq!(u.e(), 2 * u.v());
        assert_eq!(u.f(), u.v() + 2);
        assert_eq!(u.face_census(), FaceCensus::from_pairs(&[(3, 8)]));
        assert_eq!(u.strand_count(), 3);
        assert!(!u.is_knot_graph());
        assert_eq!(u.lune_count(), 0);
        assert!(u.is_lune_free());
        assert_eq!(u.is_tight(), Ok(true));
        assert_eq!(u.is_admissible(), Ok(false));
    }

    #[test]
    fn trefoil_shadow() {
        let u = trefoil();
        assert_eq!(u.v(), 3);
        assert_eq!(u.face_census(), FaceCensus::from_pairs(&[(2, 3), (3, 2)]));
        assert_eq!(u.face_census().general_excess(), 0);
        assert_eq!(u.strand_count(), 1);
        assert_eq!(u.lune_count(), 3);
        assert!(!u.is_lune_free());
        assert_eq!(u.is_tight(), Err(UniverseError::NotLuneFree));
        assert_eq!(u.is_admissible(), Err(UniverseError::NotLuneFree));
    }

    #[test]
    fn cube_is_not_four_regular() {
        let cube = crate::planar_map::fixtures::octahedron().dual().unwrap();
        assert!(matches!(
            as_universe(cube),
            Err(UniverseError::NotFourRegular { degree: 3, .. })
        ));
    }

    #[test]
    fn strand_orbits_pair_up() {
        for u in [venn(), trefoil()] {
            let orbits = strand_orbits(u.map());
            assert_eq!(orbits.iter().map(Vec::len).sum::<usize>(), 4 * u.v());
            let mut lens: Vec<usize> = orbits.iter().map(Vec::len).collect();
            lens.sort();
            for pair in lens.chunks(2) {
                assert_eq!(pair[0], pair[1]);
            }
        }
    }

    #[test]
    fn figure_eight_shadow_is_positive_genus_when_rotation_is_wrong() {
        // A one-vertex 4-regular map with two interleaved loops has genus 1.
        let m = build_map(&[vec![0, 1, 0, 1]]).unwrap();
        assert_eq!(as_universe(m).unwrap_err(), UniverseError::Map(MapError::PositiveGenus(1)));
        // Nested loops are planar: the figure-eight curve shadow.
        let m = build_map(&[vec![0, 0, 1, 1]]).unwrap();
        let u = as_universe(m).unwrap();
        assert_eq!(u.strand_count(), 1);
        assert_eq!(u.face_census(), FaceCensus::from_pairs(&[(1, 2), (2, 1)]));
    }
}
