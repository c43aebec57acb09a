//! Orderly generation of rooted sphere maps by breadth-first code.
//!
//! The search emits the canonical trace of the map it is building, one dart
//! at a time in trace order. At each unpaired dart it either joins it to
//! another open dart of the same partial face (which keeps the map on the
//! sphere) or hangs a fresh vertex on it. Options are tried in increasing
//! emitted value, so complete maps come out sorted by code. A map is kept
//! only if no other root or orientation traces to a smaller code, and
//! partial maps are cut as soon as some alternative trace is already
//! smaller on its determined prefix.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::planar_map::PlanarMap;

const OPEN: usize = usize::MAX;
const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Target {
    /// 4-regular maps with exactly `v` vertices.
    Universe { v: usize },
    /// Maps with exactly `e` edges and free vertex degrees.
    Edges { e: usize },
}

#[derive(Debug, Clone)]
pub(crate) struct GenSpec {
    pub target: Target,
    pub min_vertex_deg: usize,
    pub min_face_deg: usize,
    pub simple: bool,
}

/// One generated map with its canonical code (reflections included).
#[derive(Debug, Clone)]
pub(crate) struct Generated {
    pub code: Vec<u32>,
    pub map: PlanarMap,
}

#[derive(Clone)]
struct State {
    offsets: Vec<usize>,
    degs: Vec<usize>,
    vertex_of: Vec<usize>,
    alpha: Vec<usize>,
    code: Vec<u32>,
    adj: Vec<Vec<bool>>,
    k: usize,
}

impl State {
    fn root(deg: usize) -> Self {
        State {
            offsets: vec![0],
            degs: vec![deg],
            vertex_of: vec![0; deg],
            alpha: vec![OPEN; deg],
            code: vec![deg as u32],
            adj: vec![Vec::new()],
            k: 0,
        }
    }

    #[inline]
    fn sigma(&self, d: usize) -> usize {
        let v = self.vertex_of[d];
        let start = self.offsets[v];
        if d + 1 == start + self.degs[v] {
            start
        } else {
            d + 1
        }
    }

    #[inline]
    fn sigma_inv(&self, d: usize) -> usize {
        let v = self.vertex_of[d];
        let start = self.offsets[v];
        if d == start {
            start + self.degs[v] - 1
        } else {
            d - 1
        }
    }

    /// Boundary walk of the partial face containing `k`; an open dart is a
    /// dangling stub, so the walk turns straight around it.
    fn face_walk(&self, k: usize, out: &mut Vec<usize>) {
        out.clear();
        let mut x = k;
        loop {
            out.push(x);
            x = match self.alpha[x] {
                OPEN => self.sigma(x),
                a => self.sigma(a),
            };
            if x == k {
                break;
            }
        }
    }

    fn adjacent(&self, a: usize, b: usize) -> bool {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.adj[hi].get(lo).copied().unwrap_or(false)
    }

    fn set_adjacent(&mut self, a: usize, b: usize, value: bool) {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let row = &mut self.adj[hi];
        if row.len() <= lo {
            row.resize(lo + 1, false);
        }
        row[lo] = value;
    }

    fn to_map(&self) -> PlanarMap {
        PlanarMap::from_pairing(&self.degs, self.alpha.clone())
    }
}

/// Scratch space for alternative traces.
#[derive(Default)]
struct Scratch {
    number: Vec<u32>,
    order: Vec<usize>,
    walk: Vec<usize>,
}

impl Scratch {
    /// Compares the trace from `root` against `st.code` as far as both are
    /// determined. `Less` means the alternative is strictly smaller.
    fn compare(&mut self, st: &State, root: usize, mirror: bool) -> Ordering {
        let n = st.alpha.len();
        self.number.clear();
        self.number.resize(n, UNSET);
        self.order.clear();
        let code = &st.code;
        let mut idx = 0;
        macro_rules! emit {
            ($value:expr) => {{
                if idx >= code.len() {
                    return Ordering::Equal;
                }
                match ($value as u32).cmp(&code[idx]) {
                    Ordering::Equal => idx += 1,
                    other => return other,
                }
            }};
        }
        let open_vertex = |d0: usize, number: &mut Vec<u32>, order: &mut Vec<usize>| {
            let mut d = d0;
            loop {
                number[d] = order.len() as u32;
                order.push(d);
                d = if mirror { st.sigma_inv(d) } else { st.sigma(d) };
                if d == d0 {
                    break;
                }
            }
        };
        open_vertex(root, &mut self.number, &mut self.order);
        emit!(st.degs[st.vertex_of[root]]);
        let mut kk = 0;
        while kk < self.order.len() {
            let partner = st.alpha[self.order[kk]];
            if partner == OPEN {
                return Ordering::Equal;
            }
            if self.number[partner] == UNSET {
                let fresh = self.order.len();
                open_vertex(partner, &mut self.number, &mut self.order);
                emit!(fresh);
                emit!(st.degs[st.vertex_of[partner]]);
            } else {
                emit!(self.number[partner]);
            }
            kk += 1;
        }
        Ordering::Equal
    }

    /// No alternative root or orientation is already smaller.
    fn still_minimal(&mut self, st: &State) -> bool {
        let root_deg = st.code[0] as usize;
        for root in 0..st.alpha.len() {
            if st.degs[st.vertex_of[root]] > root_deg {
                continue;
            }
            for mirror in [false, true] {
                if (root != 0 || mirror) && self.compare(st, root, mirror) == Ordering::Less {
                    return false;
                }
            }
        }
        true
    }
}

enum Frontier {
    Done(Generated),
    Subtree(State),
}

pub(crate) struct Generator {
    spec: GenSpec,
}

impl Generator {
    pub fn new(spec: GenSpec) -> Self {
        Generator { spec }
    }

    fn total_darts(&self) -> Option<usize> {
        match self.spec.target {
            Target::Universe { .. } => None,
            Target::Edges { e } => Some(2 * e),
        }
    }

    fn root_degrees(&self) -> Vec<usize> {
        match self.spec.target {
            Target::Universe { .. } => vec![4],
            Target::Edges { e } => (self.spec.min_vertex_deg.max(1)..=2 * e).collect(),
        }
    }

    /// Degrees allowed for a fresh vertex, or an empty list once no more
    /// vertices fit.
    fn new_vertex_degrees(&self, st: &State) -> std::ops::RangeInclusive<usize> {
        match self.spec.target {
            Target::Universe { v } => {
                if st.degs.len() < v {
                    4..=4
                } else {
                    #[allow(clippy::reversed_empty_ranges)]
                    {
                        1..=0
                    }
                }
            }
            Target::Edges { e } => self.spec.min_vertex_deg.max(1)..=(2 * e - st.alpha.len()),
        }
    }

    fn complete(&self, st: &State) -> bool {
        match self.spec.target {
            Target::Universe { v } => st.degs.len() == v,
            Target::Edges { e } => st.alpha.len() == 2 * e,
        }
    }

    /// Every face must hold an even number of open darts once no vertex can
    /// be added, since the rest must pair up inside faces.
    fn faces_even(&self, st: &State, scratch: &mut Scratch) -> bool {
        let n = st.alpha.len();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] || st.alpha[start] != OPEN {
                continue;
            }
            st.face_walk(start, &mut scratch.walk);
            let mut open = 0;
            for &x in &scratch.walk {
                seen[x] = true;
                if st.alpha[x] == OPEN {
                    open += 1;
                }
            }
            if open % 2 == 1 {
                return false;
            }
        }
        true
    }

    fn search(
        &self,
        st: &mut State,
        scratch: &mut Scratch,
        split: Option<usize>,
        out: &mut Vec<Frontier>,
    ) {
        if let Some(depth) = split {
            if st.code.len() >= depth && st.k < st.alpha.len() {
                out.push(Frontier::Subtree(st.clone()));
                return;
            }
        }
        let k = st.k;
        if k == st.alpha.len() {
            if self.complete(st) {
                out.push(Frontier::Done(Generated {
                    code: st.code.clone(),
                    map: st.to_map(),
                }));
            }
            return;
        }
        if st.alpha[k] != OPEN {
            st.code.push(st.alpha[k] as u32);
            st.k += 1;
            self.descend(st, scratch, split, out);
            st.k -= 1;
            st.code.pop();
            return;
        }

        let mut walk = Vec::new();
        st.face_walk(k, &mut walk);
        let no_more_vertices = self.new_vertex_degrees(st).is_empty();
        let min_face = self.spec.min_face_deg;
        let vk = st.vertex_of[k];

        let mut partners: Vec<(usize, usize)> = walk
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, &x)| st.alpha[x] == OPEN)
            .map(|(p, &x)| (x, p))
            .collect();
        partners.sort_unstable();
        for &(j, p) in &partners {
            let vj = st.vertex_of[j];
            if self.spec.simple && (vj == vk || st.adjacent(vk, vj)) {
                continue;
            }
            let open_between = walk[1..p].iter().filter(|&&x| st.alpha[x] == OPEN).count();
            let open_after = partners.len() - 1 - open_between;
            if (open_between == 0 && p < min_face) || (open_after == 0 && walk.len() - p < min_face)
            {
                continue;
            }
            if no_more_vertices && (open_between % 2 == 1 || open_after % 2 == 1) {
                continue;
            }
            st.alpha[k] = j;
            st.alpha[j] = k;
            let was_adjacent = st.adjacent(vk, vj);
            st.set_adjacent(vk, vj, true);
            st.code.push(j as u32);
            st.k += 1;
            self.descend(st, scratch, split, out);
            st.k -= 1;
            st.code.pop();
            st.set_adjacent(vk, vj, was_adjacent);
            st.alpha[j] = OPEN;
            st.alpha[k] = OPEN;
        }

        for d in self.new_vertex_degrees(st) {
            if d == 1 && partners.is_empty() && walk.len() + 1 < min_face {
                continue;
            }
            let fresh = st.alpha.len();
            let w = st.degs.len();
            st.offsets.push(fresh);
            st.degs.push(d);
            st.vertex_of.extend(std::iter::repeat(w).take(d));
            st.alpha.extend(std::iter::repeat(OPEN).take(d));
            st.alpha[k] = fresh;
            st.alpha[fresh] = k;
            st.adj.push(Vec::new());
            st.set_adjacent(vk, w, true);
            st.code.push(fresh as u32);
            st.code.push(d as u32);
            st.k += 1;
            let viable = !self.new_vertex_degrees(st).is_empty() || self.faces_even(st, scratch);
            if viable {
                self.descend(st, scratch, split, out);
            }
            st.k -= 1;
            st.code.truncate(st.code.len() - 2);
            st.adj.pop();
            st.alpha[k] = OPEN;
            st.alpha.truncate(fresh);
            st.vertex_of.truncate(fresh);
            st.degs.pop();
            st.offsets.pop();
        }
    }

    fn descend(
        &self,
        st: &mut State,
        scratch: &mut Scratch,
        split: Option<usize>,
        out: &mut Vec<Frontier>,
    ) {
        if scratch.still_minimal(st) {
            self.search(st, scratch, split, out);
        }
    }

    /// All maps matching the `GenSpec`, one per isomorphism class (reflections
    /// identified), sorted by canonical code.
    pub fn run(&self) -> Vec<Generated> {
        let mut frontier = Vec::new();
        let mut scratch = Scratch::default();
        let split = self.split_depth();
        for deg in self.root_degrees() {
            if self.total_darts().is_some_and(|t| deg > t) {
                continue;
            }
            let mut st = State::root(deg);
            if self.spec.simple && deg < 1 {
                continue;
            }
            self.search(&mut st, &mut scratch, Some(split), &mut frontier);
        }
        frontier
            .into_par_iter()
            .map(|item| match item {
                Frontier::Done(g) => vec![g],
                Frontier::Subtree(mut st) => {
                    let mut scratch = Scratch::default();
                    let mut out = Vec::new();
                    self.search(&mut st, &mut scratch, None, &mut out);
                    out.into_iter()
                        .map(|f| match f {
                            Frontier::Done(g) => g,
                            Frontier::Subtree(_) => unreachable!("no split inside subtrees"),
                        })
                        .collect()
                }
            })
            .flatten()
            .collect()
    }

    fn split_depth(&self) -> usize {
        match self.spec.target {
            Target::Universe { v } => (v + 6).min(4 * v),
            Target::Edges { e } => (e + 4).min(2 * e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::canonical_code;

    fn universes(v: usize, simple: bool) -> Vec<Generated> {
        Generator::new(GenSpec {
            target: Target::Universe { v },
            min_vertex_deg: 4,
            min_face_deg: if simple { 3 } else { 1 },
            simple,
        })
        .run()
    }

    #[test]
    fn generated_codes_are_canonical_and_sorted() {
        for v in 1..=6 {
            let out = universes(v, false);
            for g in &out {
                assert_eq!(canonical_code(&g.map, true).code, g.code);
                assert_eq!(g.map.genus(), Ok(0));
            }
            assert!(out.windows(2).all(|w| w[0].code < w[1].code));
        }
    }

    #[test]
    fn small_universe_counts() {
        // one-vertex shadows: the figure-eight curve only
        assert_eq!(universes(1, false).len(), 1);
        // two vertices: three shadows up to sphere isomorphism and reflection
        let two = universes(2, false);
        assert!(two.iter().all(|g| g.map.vertex_count() == 2));
        assert_eq!(universes(6, true).len(), 1);
        assert!(universes(7, true).is_empty());
    }

    #[test]
    fn plane_graphs_with_three_edges() {
        // connected plane maps with 3 edges, any degrees
        let out = Generator::new(GenSpec {
            target: Target::Edges { e: 1 },
            min_vertex_deg: 1,
            min_face_deg: 1,
            simple: false,
        })
        .run();
        // a single edge is either a bridge or a loop
        assert_eq!(out.len(), 2);
    }
}
