//! Exhaustive enumeration of universes and plane graphs.
//!
//! Two independent pipelines produce lune-free universes: the direct
//! generator over 4-regular rotation systems, and plane graphs pushed
//! through the medial construction. Each serves as the other's oracle.

mod gen;

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::knot_graph::{as_universe, Universe};
use crate::medial::{medial, PlaneGraph};
use crate::planar_map::{build_map, canonical_code, CanonicalCode};

use gen::{GenSpec, Generator, Target};

/// Count of lune-free universes with 13 vertices, up to sphere isomorphism
/// and reflection, as computed by [`census_table`].
pub const LUNE_FREE_UNIVERSES_V13: usize = 21;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("{what} = {requested} exceeds the configured ceiling {ceiling}")]
    CeilingExceeded {
        what: &'static str,
        requested: usize,
        ceiling: usize,
    },
    #[error("invalid filter: {0}")]
    BadFilter(String),
    #[error("pipelines disagree at v={v}: {only_a} classes only in A, {only_b} only in B")]
    Mismatch {
        v: usize,
        only_a: usize,
        only_b: usize,
    },
}

/// Upper bounds on enumeration size. Exceeding one is an error rather than
/// a long-running search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Ceilings {
    pub simple_v: usize,
    pub general_v: usize,
    pub plane_e: usize,
    pub cross_check_v: usize,
}

impl Default for Ceilings {
    fn default() -> Self {
        Ceilings {
            simple_v: 13,
            general_v: 10,
            plane_e: 12,
            cross_check_v: 10,
        }
    }
}

impl Ceilings {
    /// Defaults overridden by `LUNEFREE_CEILING_SIMPLE`, `LUNEFREE_CEILING_GENERAL`,
    /// `LUNEFREE_CEILING_PLANE` and `LUNEFREE_CEILING_CROSS`.
    pub fn from_env() -> Self {
        let mut c = Ceilings::default();
        let read = |name: &str, slot: &mut usize| {
            if let Some(n) = std::env::var(name).ok().and_then(|s| s.trim().parse().ok()) {
                *slot = n;
            }
        };
        read("LUNEFREE_CEILING_SIMPLE", &mut c.simple_v);
        read("LUNEFREE_CEILING_GENERAL", &mut c.general_v);
        read("LUNEFREE_CEILING_PLANE", &mut c.plane_e);
        read("LUNEFREE_CEILING_CROSS", &mut c.cross_check_v);
        c
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumFilter {
    pub require_simple: bool,
    pub mu: Option<usize>,
    /// Only lune-free universes can match a tightness filter.
    pub tight: Option<bool>,
    pub v_min: usize,
    pub v_max: usize,
}

impl EnumFilter {
    pub fn exactly(v: usize) -> Self {
        EnumFilter {
            require_simple: false,
            mu: None,
            tight: None,
            v_min: v,
            v_max: v,
        }
    }

    pub fn up_to(v_max: usize) -> Self {
        EnumFilter {
            v_min: 1,
            ..EnumFilter::exactly(v_max)
        }
    }

    pub fn simple(mut self) -> Self {
        self.require_simple = true;
        self
    }

    pub fn mu(mut self, mu: usize) -> Self {
        self.mu = Some(mu);
        self
    }

    pub fn tight(mut self, tight: bool) -> Self {
        self.tight = Some(tight);
        self
    }

    fn validate(&self, ceilings: &Ceilings) -> Result<(), EnumError> {
        if self.v_min == 0 || self.v_min > self.v_max {
            return Err(EnumError::BadFilter(format!(
                "vertex bounds {}..={} are empty",
                self.v_min, self.v_max
            )));
        }
        if self.mu == Some(0) {
            return Err(EnumError::BadFilter("mu must be positive".into()));
        }
        let (what, ceiling) = if self.require_simple {
            ("simple v", ceilings.simple_v)
        } else {
            ("general v", ceilings.general_v)
        };
        if self.v_max > ceiling {
            return Err(EnumError::CeilingExceeded {
                what,
                requested: self.v_max,
                ceiling,
            });
        }
        Ok(())
    }

    pub fn matches(&self, u: &Universe) -> bool {
        if self.require_simple && !u.is_lune_free() {
            return false;
        }
        if self.mu.is_some_and(|m| u.strand_count() != m) {
            return false;
        }
        match self.tight {
            None => true,
            Some(t) => u.is_tight() == Ok(t),
        }
    }
}

/// One row of the census: counts of isomorphism classes with `v` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub v: usize,
    pub total_lune_free: usize,
    pub knot_graphs: usize,
    pub tight_lune_free: usize,
    pub tight_knot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub v: usize,
    pub pipeline_a: Vec<CanonicalCode>,
    pub pipeline_b: Vec<CanonicalCode>,
    /// Plane graphs with `v` edges fed into pipeline B.
    pub plane_graphs: usize,
}

fn generate_universes(v: usize, simple: bool) -> Vec<gen::Generated> {
    Generator::new(GenSpec {
        target: Target::Universe { v },
        min_vertex_deg: 4,
        min_face_deg: if simple { 3 } else { 1 },
        simple,
    })
    .run()
}

fn universes_exactly(v: usize, simple: bool) -> Vec<Universe> {
    generate_universes(v, simple)
        .into_iter()
        .map(|g| as_universe(g.map).expect("generator output is a universe"))
        .collect()
}

/// Universes matching `filter`, one per class, ordered by vertex count and
/// then by canonical code.
pub fn enumerate_universes(filter: &EnumFilter) -> Result<Vec<Universe>, EnumError> {
    enumerate_universes_with(filter, &Ceilings::from_env())
}

pub fn enumerate_universes_with(
    filter: &EnumFilter,
    ceilings: &Ceilings,
) -> Result<Vec<Universe>, EnumError> {
    filter.validate(ceilings)?;
    let simple = filter.require_simple || filter.tight.is_some();
    Ok((filter.v_min..=filter.v_max)
        .flat_map(|v| universes_exactly(v, simple))
        .filter(|u| filter.matches(u))
        .collect())
}

/// Plane graphs with `1..=e_max` edges and the given minimum degrees, one per
/// class, ordered by edge count and then canonical code. Degree limits prune
/// the search rather than filter its output.
pub fn enumerate_plane_graphs(
    e_max: usize,
    min_vertex_deg: usize,
    min_face_deg: usize,
    simple_only: bool,
) -> Result<Vec<PlaneGraph>, EnumError> {
    enumerate_plane_graphs_with(e_max, min_vertex_deg, min_face_deg, simple_only, &Ceilings::from_env())
}

pub fn enumerate_plane_graphs_with(
    e_max: usize,
    min_vertex_deg: usize,
    min_face_deg: usize,
    simple_only: bool,
    ceilings: &Ceilings,
) -> Result<Vec<PlaneGraph>, EnumError> {
    if e_max > ceilings.plane_e {
        return Err(EnumError::CeilingExceeded {
            what: "plane e",
            requested: e_max,
            ceiling: ceilings.plane_e,
        });
    }
    Ok((1..=e_max)
        .flat_map(|e| plane_graphs_exactly(e, min_vertex_deg, min_face_deg, simple_only))
        .collect())
}

fn plane_graphs_exactly(e: usize, min_v: usize, min_f: usize, simple: bool) -> Vec<PlaneGraph> {
    Generator::new(GenSpec {
        target: Target::Edges { e },
        min_vertex_deg: min_v,
        min_face_deg: min_f,
        simple,
    })
    .run()
    .into_iter()
    .map(|g| PlaneGraph::new(g.map).expect("generator output lies on the sphere"))
    .collect()
}

pub fn census_table(v_max: usize) -> Result<Vec<CensusRow>, EnumError> {
    census_table_with(v_max, &Ceilings::from_env())
}

pub fn census_table_with(v_max: usize, ceilings: &Ceilings) -> Result<Vec<CensusRow>, EnumError> {
    EnumFilter::up_to(v_max).simple().validate(ceilings)?;
    Ok((1..=v_max)
        .map(|v| {
            let all = universes_exactly(v, true);
            let mut row = CensusRow {
                v,
                total_lune_free: all.len(),
                knot_graphs: 0,
                tight_lune_free: 0,
                tight_knot: 0,
            };
            for u in &all {
                let knot = u.is_knot_graph();
                let tight = u.is_tight() == Ok(true);
                row.knot_graphs += knot as usize;
                row.tight_lune_free += tight as usize;
                row.tight_knot += (knot && tight) as usize;
            }
            row
        })
        .collect())
}

/// Compares the direct generator with medials of plane graphs having `v`
/// edges and all vertex and face degrees at least 3.
pub fn oracle_cross_check(v: usize) -> Result<CrossCheckReport, EnumError> {
    oracle_cross_check_with(v, &Ceilings::from_env())
}

pub fn oracle_cross_check_with(v: usize, ceilings: &Ceilings) -> Result<CrossCheckReport, EnumError> {
    if v > ceilings.cross_check_v {
        return Err(EnumError::CeilingExceeded {
            what: "cross-check v",
            requested: v,
            ceiling: ceilings.cross_check_v,
        });
    }
    let pipeline_a: Vec<CanonicalCode> = generate_universes(v, true)
        .into_iter()
        .map(|g| CanonicalCode {
            code: g.code,
            mirror_included: true,
        })
        .collect();
    let plane = if v >= 2 { plane_graphs_exactly(v, 3, 3, false) } else { Vec::new() };
    let pipeline_b: Vec<CanonicalCode> = plane
        .iter()
        .filter_map(|g| medial(g).ok())
        .filter(|u| u.is_lune_free())
        .map(|u| canonical_code(u.map(), true))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if pipeline_a != pipeline_b {
        let a: BTreeSet<_> = pipeline_a.iter().collect();
        let b: BTreeSet<_> = pipeline_b.iter().collect();
        return Err(EnumError::Mismatch {
            v,
            only_a: a.difference(&b).count(),
            only_b: b.difference(&a).count(),
        });
    }
    Ok(CrossCheckReport {
        v,
        pipeline_a,
        pipeline_b,
        plane_graphs: plane.len(),
    })
}

/// A random connected plane multigraph with `e` edges, grown by hanging
/// leaves off corners and drawing chords (possibly loops or parallels)
/// across faces.
pub fn random_plane_graph<R: Rng>(rng: &mut R, e: usize) -> PlaneGraph {
    assert!(e >= 1, "need at least one edge");
    let mut rotations: Vec<Vec<u32>> = vec![vec![0], vec![0]];
    for label in 1..e as u32 {
        let map = build_map(&rotations).expect("every label is used twice");
        if rng.gen_bool(0.4) {
            let v = rng.gen_range(0..rotations.len());
            let at = rng.gen_range(0..=rotations[v].len());
            rotations[v].insert(at, label);
            rotations.push(vec![label]);
        } else {
            // two corners of one face: a corner sits just before each dart
            // of the face cycle in its vertex rotation
            let faces = map.faces();
            let cycle = &faces.cycles[rng.gen_range(0..faces.len())];
            let z1 = cycle[rng.gen_range(0..cycle.len())];
            let z2 = cycle[rng.gen_range(0..cycle.len())];
            let slot = |z: usize| {
                let v = map.vertex_of(z);
                (v, z - map.darts_of(v).start)
            };
            let (v1, i1) = slot(z1);
            let (v2, i2) = slot(z2);
            if v1 == v2 {
                let (lo, hi) = if i1 <= i2 { (i1, i2) } else { (i2, i1) };
                rotations[v1].insert(hi, label);
                rotations[v1].insert(lo, label);
            } else {
                rotations[v1].insert(i1, label);
                rotations[v2].insert(i2, label);
            }
        }
    }
    PlaneGraph::new(build_map(&rotations).expect("every label is used twice"))
        .expect("leaves and face chords keep the map on the sphere")
}
