//! Sphere-embedded multigraphs stored as rotation systems.
//!
//! A map is a set of darts (half-edges) carrying two permutations:
//! `sigma`, the counterclockwise successor around the dart's vertex, and
//! `alpha`, the fixed-point-free involution pairing the two halves of an
//! edge. Faces are the orbits of `phi = sigma ∘ alpha`.
//!
//! Darts of a vertex are stored contiguously in rotation order, so `sigma`
//! is implicit: the successor of the last dart of a vertex is its first.

mod canonical;

pub use canonical::{canonical_code, canonical_form, isomorphic, CanonicalCode, Tracer};

use std::collections::HashMap;

use thiserror::Error;

/// Index of a half-edge, in `0..2E`.
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("edge {label} is used {count} time(s); every edge id must occur exactly twice")]
    DuplicateEdgeUse { label: u32, count: usize },
    #[error("a map needs at least one vertex")]
    EmptyInput,
    #[error("vertex {0} has an empty rotation")]
    EmptyRotation(usize),
    #[error("the map is not connected")]
    Disconnected,
    #[error("the map has genus {0}, expected a sphere embedding")]
    PositiveGenus(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    offsets: Vec<usize>,
    alpha: Vec<Dart>,
    vertex_of: Vec<usize>,
    edge_of: Vec<usize>,
    edge_dart: Vec<Dart>,
    edge_labels: Vec<u32>,
    connected: bool,
}

/// The face structure of a map: every dart lies on exactly one cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub cycles: Vec<Vec<Dart>>,
    pub face_of: Vec<usize>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn degree(&self, face: usize) -> usize {
        self.cycles[face].len()
    }
}

/// Builds a map from per-vertex cyclic lists of edge labels (counterclockwise).
///
/// Each label must appear exactly twice across all lists; a label appearing
/// twice in the same list is a loop. Disconnected input is accepted and
/// flagged, see [`PlanarMap::is_connected`].
pub fn build_map(rotations: &[Vec<u32>]) -> Result<PlanarMap, MapError> {
    if rotations.is_empty() {
        return Err(MapError::EmptyInput);
    }
    let mut offsets = Vec::with_capacity(rotations.len() + 1);
    offsets.push(0);
    for (v, rot) in rotations.iter().enumerate() {
        if rot.is_empty() {
            return Err(MapError::EmptyRotation(v));
        }
        offsets.push(offsets[v] + rot.len());
    }
    let darts = offsets[rotations.len()];

    let mut first_use: HashMap<u32, Dart> = HashMap::new();
    let mut uses: HashMap<u32, usize> = HashMap::new();
    let mut alpha = vec![usize::MAX; darts];
    let mut order: Vec<u32> = Vec::new();
    for (d, &label) in rotations.iter().flatten().enumerate() {
        let count = uses.entry(label).or_insert(0);
        *count += 1;
        match first_use.get(&label) {
            None => {
                first_use.insert(label, d);
                order.push(label);
            }
            Some(&other) if *count == 2 => {
                alpha[d] = other;
                alpha[other] = d;
            }
            Some(_) => {}
        }
    }
    for &label in &order {
        let count = uses[&label];
        if count != 2 {
            return Err(MapError::DuplicateEdgeUse { label, count });
        }
    }
    Ok(PlanarMap::assemble(offsets, alpha, order))
}

impl PlanarMap {
    /// Assembles a map from vertex offsets and a complete dart pairing.
    /// Edge labels are given in order of each edge's smallest dart.
    pub(crate) fn assemble(offsets: Vec<usize>, alpha: Vec<Dart>, edge_labels: Vec<u32>) -> Self {
        let darts = alpha.len();
        let mut vertex_of = vec![0; darts];
        for v in 0..offsets.len() - 1 {
            for slot in &mut vertex_of[offsets[v]..offsets[v + 1]] {
                *slot = v;
            }
        }
        let mut edge_of = vec![usize::MAX; darts];
        let mut edge_dart = Vec::with_capacity(darts / 2);
        for d in 0..darts {
            if edge_of[d] == usize::MAX {
                edge_of[d] = edge_dart.len();
                edge_of[alpha[d]] = edge_dart.len();
                edge_dart.push(d);
            }
        }
        debug_assert_eq!(edge_labels.len(), edge_dart.len());
        let mut map = PlanarMap {
            offsets,
            alpha,
            vertex_of,
            edge_of,
            edge_dart,
            edge_labels,
            connected: false,
        };
        map.connected = map.compute_connected();
        map
    }

    /// Builds a map from vertex degrees and a dart pairing, labelling edges
    /// `0..E` in order of their smallest dart.
    pub(crate) fn from_pairing(degrees: &[usize], alpha: Vec<Dart>) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len() + 1);
        offsets.push(0);
        for &deg in degrees {
            offsets.push(offsets.last().unwrap() + deg);
        }
        let edges = alpha.len() / 2;
        PlanarMap::assemble(offsets, alpha, (0..edges as u32).collect())
    }

    fn compute_connected(&self) -> bool {
        let n = self.dart_count();
        if n == 0 {
            return self.vertex_count() == 1;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(d) = stack.pop() {
            for next in [self.sigma(d), self.alpha(d)] {
                if !seen[next] {
                    seen[next] = true;
                    count += 1;
                    stack.push(next);
                }
            }
        }
        count == n
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_dart.len()
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn require_connected(&self) -> Result<(), MapError> {
        if self.connected {
            Ok(())
        } else {
            Err(MapError::Disconnected)
        }
    }

    #[inline]
    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    #[inline]
    pub fn sigma(&self, d: Dart) -> Dart {
        let v = self.vertex_of[d];
        if d + 1 == self.offsets[v + 1] {
            self.offsets[v]
        } else {
            d + 1
        }
    }

    #[inline]
    pub fn sigma_inv(&self, d: Dart) -> Dart {
        let v = self.vertex_of[d];
        if d == self.offsets[v] {
            self.offsets[v + 1] - 1
        } else {
            d - 1
        }
    }

    /// Face successor: `phi(d) = sigma(alpha(d))`.
    #[inline]
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma(self.alpha[d])
    }

    #[inline]
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    #[inline]
    pub fn edge_of(&self, d: Dart) -> usize {
        self.edge_of[d]
    }

    /// The darts of `v` in counterclockwise order.
    pub fn darts_of(&self, v: usize) -> std::ops::Range<Dart> {
        self.offsets[v]..self.offsets[v + 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count()).map(|v| self.degree(v))
    }

    /// The smaller dart of edge `e`.
    pub fn edge_dart(&self, e: usize) -> Dart {
        self.edge_dart[e]
    }

    pub fn edge_label(&self, e: usize) -> u32 {
        self.edge_labels[e]
    }

    /// Endpoints of edge `e`, as `(vertex_of(d), vertex_of(alpha(d)))`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let d = self.edge_dart[e];
        (self.vertex_of[d], self.vertex_of[self.alpha[d]])
    }

    /// Per-vertex rotation lists of edge labels.
    pub fn rotations(&self) -> Vec<Vec<u32>> {
        (0..self.vertex_count())
            .map(|v| {
                self.darts_of(v)
                    .map(|d| self.edge_labels[self.edge_of[d]])
                    .collect()
            })
            .collect()
    }

    /// Per-vertex rotation lists of edge indices `0..E`.
    pub fn edge_rotations(&self) -> Vec<Vec<u32>> {
        (0..self.vertex_count())
            .map(|v| self.darts_of(v).map(|d| self.edge_of[d] as u32).collect())
            .collect()
    }

    /// A copy with edges relabelled `0..E` in order of their smallest dart.
    pub fn with_index_labels(&self) -> PlanarMap {
        let mut out = self.clone();
        out.edge_labels = (0..self.edge_count() as u32).collect();
        out
    }

    pub fn faces(&self) -> Faces {
        let n = self.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = cycles.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                cycle.push(d);
                d = self.phi(d);
                if d == start {
                    break;
                }
            }
            cycles.push(cycle);
        }
        Faces { cycles, face_of }
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Euler genus `(2 - V + E - F) / 2` of a connected map.
    pub fn genus(&self) -> Result<usize, MapError> {
        self.require_connected()?;
        let chi = self.vertex_count() as isize - self.edge_count() as isize
            + self.face_count() as isize;
        Ok(((2 - chi) / 2) as usize)
    }

    pub fn require_sphere(&self) -> Result<(), MapError> {
        match self.genus()? {
            0 => Ok(()),
            g => Err(MapError::PositiveGenus(g)),
        }
    }

    /// The dual map. Dual vertices are the faces of `self` in [`faces`](Self::faces)
    /// order, each rotating along its face cycle; edge labels carry over.
    pub fn dual(&self) -> Result<PlanarMap, MapError> {
        self.require_sphere()?;
        let rotations: Vec<Vec<u32>> = self
            .faces()
            .cycles
            .iter()
            .map(|c| c.iter().map(|&d| self.edge_labels[self.edge_of[d]]).collect())
            .collect();
        build_map(&rotations)
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> PlanarMap {
        let rotations: Vec<Vec<u32>> = self
            .rotations()
            .into_iter()
            .map(|mut r| {
                r.reverse();
                r
            })
            .collect();
        build_map(&rotations).expect("mirroring preserves edge multiplicities")
    }

    pub fn has_loop(&self) -> bool {
        (0..self.dart_count()).any(|d| self.vertex_of[d] == self.vertex_of[self.alpha[d]])
    }

    /// No loops and no two edges joining the same pair of vertices.
    pub fn is_simple(&self) -> bool {
        let mut seen = vec![usize::MAX; self.vertex_count()];
        for v in 0..self.vertex_count() {
            for d in self.darts_of(v) {
                let w = self.vertex_of[self.alpha[d]];
                if w == v || seen[w] == v {
                    return false;
                }
                seen[w] = v;
            }
        }
        true
    }

    /// Neighbours of `v` in rotation order (with repetition for multi-edges).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.darts_of(v).map(move |d| self.vertex_of[self.alpha[d]])
    }

    /// The same map with darts renumbered: vertices permuted by `vertex_order`
    /// (new vertex `i` is old vertex `vertex_order[i]`), each rotation started
    /// at offset `shifts[i]`, and edges relabelled by `edge_label`.
    pub fn relabeled(
        &self,
        vertex_order: &[usize],
        shifts: &[usize],
        edge_label: impl Fn(u32) -> u32,
    ) -> PlanarMap {
        let rotations: Vec<Vec<u32>> = vertex_order
            .iter()
            .zip(shifts)
            .map(|(&v, &s)| {
                let darts: Vec<Dart> = self.darts_of(v).collect();
                let n = darts.len();
                (0..n)
                    .map(|i| edge_label(self.edge_labels[self.edge_of[darts[(i + s) % n]]]))
                    .collect()
            })
            .collect();
        build_map(&rotations).expect("relabelling preserves edge multiplicities")
    }
}
