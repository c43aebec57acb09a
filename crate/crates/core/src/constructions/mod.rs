//! Named graphs and local rewrites.
//!
//! Every constructor re-checks the properties it promises (regularity,
//! genus, census bookkeeping, strand count, tightness) before returning,
//! and reports a [`ConstructionError::Postcondition`] rather than handing
//! back a graph that breaks them.

mod braid;
pub mod data;
mod families;
mod ladder;
mod moves;
mod named;

use std::fmt;

use thiserror::Error;

use crate::io::IoError;
use crate::knot_graph::{as_universe, Universe, UniverseError};
use crate::medial::MedialError;
use crate::planar_map::{build_map, Dart, MapError, PlanarMap};

pub use braid::{braid_closure_shadow, braid_shadow, BraidWord};
pub use families::{k_lune_graph, lune_free_knot_graph, twist_chain};
pub use ladder::{figure25, ladder, tight_knot_graph};
pub use moves::{
    crossing_device, crossing_device_sites, double_move, plus_nine, reidemeister_two,
    reidemeister_two_sites,
};
pub use named::{g8, knot_library, polygon_family, tight_link_graph_12, venn};

/// Where a local rewrite applies, named by darts of the target map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RewriteSite {
    /// The edge of this dart.
    Edge(Dart),
    /// The face containing this dart.
    Face(Dart),
    /// The vertex of this dart, with rotation read starting at it.
    Vertex(Dart),
    /// Two edges on one face, each given by a dart of that face's cycle.
    FaceEdgePair(Dart, Dart),
}

impl RewriteSite {
    fn darts(&self) -> Vec<Dart> {
        match *self {
            RewriteSite::Edge(d) | RewriteSite::Face(d) | RewriteSite::Vertex(d) => vec![d],
            RewriteSite::FaceEdgePair(a, b) => vec![a, b],
        }
    }

    fn check(&self, map: &PlanarMap) -> Result<(), ConstructionError> {
        match self.darts().into_iter().find(|&d| d >= map.dart_count()) {
            Some(d) => Err(ConstructionError::BadSite(format!(
                "dart {d} is outside the map ({} darts)",
                map.dart_count()
            ))),
            None => Ok(()),
        }
    }
}

/// Why `tight_knot_graph` refuses a vertex count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnrealizableReason {
    TooSmall,
    /// `v ≡ ±1 (mod 6)`; carries `v mod 6`.
    Residue(usize),
    Twelve,
}

impl fmt::Display for UnrealizableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnrealizableReason::TooSmall => write!(f, "fewer than 8 crossings"),
            UnrealizableReason::Residue(r) => {
                write!(f, "v ≡ {r} (mod 6), and tight lune-free graphs need v ≢ ±1 (mod 6)")
            }
            UnrealizableReason::Twelve => {
                write!(f, "v = 12 has tight lune-free link graphs but no tight lune-free knot graph")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("bad site: {0}")]
    BadSite(String),
    #[error("edge of dart {dart} is flanked by faces of degrees {left} and {right}; both must be at least 4")]
    InadmissibleSite { dart: Dart, left: usize, right: usize },
    #[error("no lune-free knot graph has fewer than 8 vertices (asked for {0})")]
    TooSmall(usize),
    #[error("no tight lune-free knot graph with {v} crossings: {reason}")]
    Unrealizable { v: usize, reason: UnrealizableReason },
    #[error("vertex {0} does not have degree 3")]
    NotDegreeThree(usize),
    #[error("the graph is not special")]
    NotSpecial,
    #[error("the closure is disconnected: {0}")]
    DisconnectedClosure(String),
    #[error("size {0} is not one of the stored bases 9, 15, 18, 24")]
    BadSize(usize),
    #[error("construction broke its own guarantee: {0}")]
    Postcondition(String),
    #[error(transparent)]
    Universe(#[from] UniverseError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Medial(#[from] MedialError),
    #[error(transparent)]
    Data(#[from] IoError),
}

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if cond {
        Ok(())
    } else {
        Err(ConstructionError::Postcondition(msg()))
    }
}

/// Editable rotation lists with fresh-label allocation.
#[derive(Debug, Clone)]
pub(crate) struct Surgery {
    pub rot: Vec<Vec<u32>>,
    next: u32,
    removed: Vec<bool>,
}

impl Surgery {
    pub fn new(map: &PlanarMap) -> Self {
        let rot = map.rotations();
        let next = rot.iter().flatten().copied().max().map_or(0, |m| m + 1);
        let removed = vec![false; rot.len()];
        Surgery { rot, next, removed }
    }

    pub fn fresh(&mut self) -> u32 {
        self.next += 1;
        self.next - 1
    }

    /// The label currently stored at dart `d` of the source map.
    pub fn label(&self, map: &PlanarMap, d: Dart) -> u32 {
        let v = map.vertex_of(d);
        self.rot[v][d - map.darts_of(v).start]
    }

    pub fn set(&mut self, map: &PlanarMap, d: Dart, label: u32) {
        let v = map.vertex_of(d);
        let at = d - map.darts_of(v).start;
        self.rot[v][at] = label;
    }

    pub fn push_vertex(&mut self, rotation: Vec<u32>) -> usize {
        self.rot.push(rotation);
        self.removed.push(false);
        self.rot.len() - 1
    }

    pub fn remove_vertex(&mut self, v: usize) {
        self.removed[v] = true;
    }

    pub fn build(self) -> Result<PlanarMap, MapError> {
        let rotations: Vec<Vec<u32>> = self
            .rot
            .into_iter()
            .zip(self.removed)
            .filter(|(_, gone)| !gone)
            .map(|(r, _)| r)
            .collect();
        build_map(&rotations)
    }

    pub fn universe(self) -> Result<Universe, ConstructionError> {
        Ok(as_universe(self.build()?)?)
    }
}

/// Lune-free universes must satisfy `f3 = 8 + Σ_{k≥5} (k−4) f_k`.
pub(crate) fn check_lune_free(u: &Universe, what: &str) -> Result<(), ConstructionError> {
    ensure(u.is_lune_free(), || format!("{what} is not lune-free"))?;
    ensure(u.face_census().triangle_excess() == 0, || {
        format!("{what} breaks the triangle identity: census {}", u.face_census())
    })
}

pub(crate) fn check_knot(u: &Universe, v: usize, what: &str) -> Result<(), ConstructionError> {
    ensure(u.v() == v, || format!("{what} has {} vertices, expected {v}", u.v()))?;
    ensure(u.strand_count() == 1, || {
        format!("{what} has {} strands, expected 1", u.strand_count())
    })
}
