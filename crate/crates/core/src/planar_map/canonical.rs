//! Canonical codes for connected maps.
//!
//! A trace from a root dart numbers darts breadth-first: the root vertex's
//! darts first, in rotation order from the root, then each newly reached
//! vertex's darts in rotation order from the dart through which it was
//! reached. The code is the degree of the root vertex followed, for every
//! dart in numbering order, by the number of its partner, with the degree of
//! the partner's vertex appended whenever that partner opens a new vertex.
//!
//! The trace determines the rooted map, so minimising over every root (and
//! over the mirror rotation when reflections are identified) gives a complete
//! isomorphism invariant. Cost is O(darts²) per map.

use std::cmp::Ordering;

use super::{Dart, PlanarMap};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    pub code: Vec<u32>,
    pub mirror_included: bool,
}

const UNSET: u32 = u32::MAX;

/// Reusable scratch space for traces.
#[derive(Debug, Default)]
pub struct Tracer {
    number: Vec<u32>,
    order: Vec<Dart>,
    pub code: Vec<u32>,
}

impl Tracer {
    pub fn new() -> Self {
        Self::default()
    }

    /// Traces `map` from `root`, comparing against `bound` as values are
    /// emitted. Returns `Greater` as soon as the trace exceeds `bound`
    /// (leaving `self.code` partial), otherwise the full comparison with the
    /// complete code left in `self.code`. Without a bound the result is `Less`.
    pub fn trace(
        &mut self,
        map: &PlanarMap,
        root: Dart,
        mirror: bool,
        bound: Option<&[u32]>,
    ) -> Ordering {
        let n = map.dart_count();
        self.number.clear();
        self.number.resize(n, UNSET);
        self.order.clear();
        self.code.clear();

        let rot = |d: Dart| if mirror { map.sigma_inv(d) } else { map.sigma(d) };
        let mut decided = bound.is_none();
        macro_rules! emit {
            ($value:expr) => {{
                let value: u32 = $value;
                if !decided {
                    let i = self.code.len();
                    match bound.and_then(|b| b.get(i)) {
                        Some(&b) if value > b => return Ordering::Greater,
                        Some(&b) if value < b => decided = true,
                        None => decided = true,
                        _ => {}
                    }
                }
                self.code.push(value);
            }};
        }

        let open_vertex = |start: Dart, number: &mut Vec<u32>, order: &mut Vec<Dart>| {
            let mut d = start;
            loop {
                number[d] = order.len() as u32;
                order.push(d);
                d = rot(d);
                if d == start {
                    break;
                }
            }
        };

        open_vertex(root, &mut self.number, &mut self.order);
        emit!(map.degree(map.vertex_of(root)) as u32);
        let mut k = 0;
        while k < self.order.len() {
            let partner = map.alpha(self.order[k]);
            if self.number[partner] == UNSET {
                let fresh = self.order.len() as u32;
                open_vertex(partner, &mut self.number, &mut self.order);
                emit!(fresh);
                emit!(map.degree(map.vertex_of(partner)) as u32);
            } else {
                emit!(self.number[partner]);
            }
            k += 1;
        }
        match bound {
            None => Ordering::Less,
            Some(b) if decided && self.code.as_slice() < b => Ordering::Less,
            Some(b) => self.code.as_slice().cmp(b),
        }
    }

    /// Minimum trace over all roots (and mirrors when `include_mirror`).
    pub fn canonical(&mut self, map: &PlanarMap, include_mirror: bool) -> Vec<u32> {
        let mut best: Option<Vec<u32>> = None;
        let mirrors: &[bool] = if include_mirror { &[false, true] } else { &[false] };
        for &mirror in mirrors {
            for root in 0..map.dart_count() {
                if self.trace(map, root, mirror, best.as_deref()) == Ordering::Less {
                    best = Some(self.code.clone());
                }
            }
        }
        best.unwrap_or_default()
    }

    /// True when no root/orientation produces a trace smaller than `code`.
    pub fn is_minimal(&mut self, map: &PlanarMap, code: &[u32], include_mirror: bool) -> bool {
        let mirrors: &[bool] = if include_mirror { &[false, true] } else { &[false] };
        for &mirror in mirrors {
            for root in 0..map.dart_count() {
                if self.trace(map, root, mirror, Some(code)) == Ordering::Less {
                    return false;
                }
            }
        }
        true
    }
}

/// Canonical code of a connected map. Maps with zero darts get an empty code.
pub fn canonical_code(map: &PlanarMap, include_mirror: bool) -> CanonicalCode {
    debug_assert!(map.is_connected(), "canonical codes need connected maps");
    CanonicalCode {
        code: Tracer::new().canonical(map, include_mirror),
        mirror_included: include_mirror,
    }
}

/// The map renumbered along its minimal trace: vertices in the order the
/// trace opens them, each rotation starting at the dart it was entered by,
/// edges labelled `0..E` by first appearance. Isomorphic maps (reflections
/// included) get identical canonical forms.
pub fn canonical_form(map: &PlanarMap) -> PlanarMap {
    let mut tracer = Tracer::new();
    let best = tracer.canonical(map, true);
    let mut chosen = None;
    'search: for mirror in [false, true] {
        for root in 0..map.dart_count() {
            tracer.trace(map, root, mirror, None);
            if tracer.code == best {
                chosen = Some((root, mirror));
                break 'search;
            }
        }
    }
    let Some((root, mirror)) = chosen else {
        return map.with_index_labels();
    };
    tracer.trace(map, root, mirror, None);
    let order = tracer.order.clone();
    let number = &tracer.number;
    let mut degrees = Vec::new();
    let mut alpha = vec![0; order.len()];
    let mut k = 0;
    while k < order.len() {
        let deg = map.degree(map.vertex_of(order[k]));
        degrees.push(deg);
        for i in k..k + deg {
            alpha[i] = number[map.alpha(order[i])] as Dart;
        }
        k += deg;
    }
    PlanarMap::from_pairing(&degrees, alpha)
}

/// Sphere-homeomorphism isomorphism, reflections included.
pub fn isomorphic(a: &PlanarMap, b: &PlanarMap) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.dart_count() == b.dart_count()
        && canonical_code(a, true) == canonical_code(b, true)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::build_map;
    use super::*;
    use proptest::prelude::*;

    fn relabel_strategy(m: &PlanarMap) -> impl Strategy<Value = (Vec<usize>, Vec<usize>, u32)> {
        let v = m.vertex_count();
        (
            Just((0..v).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(0usize..8, v),
            1u32..1000,
        )
    }

    #[test]
    fn trace_from_zero_reproduces_numbering() {
        let m = octahedron();
        let mut t = Tracer::new();
        t.trace(&m, 0, false, None);
        assert_eq!(t.code[0], 4);
        assert_eq!(t.code.len(), 1 + m.dart_count() + (m.vertex_count() - 1));
    }

    #[test]
    fn chiral_map_matches_its_mirror_only_with_reflections() {
        // Octahedron with one face subdivided is still achiral; use a wheel
        // with a decorated rim instead: hub with 5 spokes, pendant edges at
        // rim vertices 1 and 2 placed asymmetrically.
        let m = build_map(&[
            vec![0, 1, 2, 3, 4],
            vec![0, 9, 5, 10],
            vec![1, 5, 6, 11],
            vec![2, 6, 7],
            vec![3, 7, 8],
            vec![4, 8, 9],
            vec![10],
            vec![11],
        ])
        .unwrap();
        assert_eq!(m.genus(), Ok(0));
        let mirror = m.mirror();
        assert_eq!(canonical_code(&m, true), canonical_code(&mirror, true));
        assert!(isomorphic(&m, &mirror));
    }

    #[test]
    fn canonical_form_is_shared_by_relabelings() {
        let m = k5();
        let r = m.relabeled(&[3, 1, 4, 0, 2], &[1, 2, 3, 0, 1], |l| 40 - l).mirror();
        let a = canonical_form(&m);
        assert_eq!(a, canonical_form(&r));
        assert_eq!(canonical_code(&a, true), canonical_code(&m, true));
        let mut t = Tracer::new();
        let best = t.canonical(&a, true);
        t.trace(&a, 0, false, None);
        assert_eq!(t.code, best);
    }

    #[test]
    fn distinct_maps_have_distinct_codes() {
        assert_ne!(canonical_code(&octahedron(), true), canonical_code(&tetrahedron(), true));
        assert!(!isomorphic(&octahedron(), &octahedron().dual().unwrap()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn code_is_relabeling_invariant(
            (order, shifts, scale) in relabel_strategy(&octahedron())
        ) {
            let m = octahedron();
            let r = m.relabeled(&order, &shifts, |l| l * scale + 3);
            prop_assert_eq!(canonical_code(&r, false), canonical_code(&m, false));
            prop_assert_eq!(canonical_code(&r, true), canonical_code(&m, true));
        }

        #[test]
        fn k5_code_is_relabeling_invariant(
            (order, shifts, scale) in relabel_strategy(&k5())
        ) {
            let m = k5();
            let r = m.relabeled(&order, &shifts, |l| l * scale);
            prop_assert_eq!(canonical_code(&r, true), canonical_code(&m, true));
        }
    }
}
