use std::collections::BTreeSet;

use lunefree::constructions::{
    braid_shadow, k_lune_graph, ladder, lune_free_knot_graph, polygon_family, tight_knot_graph, twist_chain,
    RewriteSite,
};
use lunefree::enumerate::{enumerate_universes, EnumFilter};
use lunefree::knot_graph::as_universe;
use lunefree::medial::{angle_components, medial, wheel};
use lunefree::planar_map::{build_map, canonical_code, CanonicalCode};

/// Every 4-regular plane map on `v` vertices, by pairing up darts in all
/// possible ways and keeping the connected spherical ones.
fn brute_force_universes(v: usize) -> BTreeSet<CanonicalCode> {
    fn pair_up(free: &mut Vec<usize>, label: &mut Vec<u32>, next: u32, v: usize, out: &mut BTreeSet<CanonicalCode>) {
        let Some(&first) = free.first() else {
            let rotations: Vec<Vec<u32>> = label.chunks(4).map(|c| c.to_vec()).collect();
            let map = build_map(&rotations).unwrap();
            if map.is_connected() && map.genus() == Ok(0) {
                out.insert(canonical_code(&map, true));
            }
            return;
        };
        for i in 1..free.len() {
            let second = free[i];
            label[first] = next;
            label[second] = next;
            let rest: Vec<usize> = free.iter().copied().filter(|&d| d != first && d != second).collect();
            let saved = std::mem::replace(free, rest);
            pair_up(free, label, next + 1, v, out);
            *free = saved;
        }
    }
    let mut out = BTreeSet::new();
    let mut free: Vec<usize> = (0..4 * v).collect();
    let mut label = vec![0; 4 * v];
    pair_up(&mut free, &mut label, 0, v, &mut out);
    out
}

#[test]
fn generator_matches_brute_force() {
    for v in 1..=4 {
        let generated: BTreeSet<CanonicalCode> = enumerate_universes(&EnumFilter::exactly(v))
            .unwrap()
            .iter()
            .map(|u| canonical_code(u.map(), true))
            .collect();
        assert_eq!(generated, brute_force_universes(v), "v={v}");
    }
}

#[test]
fn lune_free_orders_up_to_forty() {
    for v in 8..=40 {
        let u = lune_free_knot_graph(v).unwrap();
        assert_eq!(u.v(), v);
        assert!(u.is_lune_free() && u.is_knot_graph(), "v={v}");
        assert_eq!(u.face_census().triangle_excess(), 0);
    }
}

#[test]
fn tight_orders_follow_residues() {
    for v in 1..=48 {
        let expected = v >= 8 && v % 6 != 1 && v % 6 != 5 && v != 12;
        match tight_knot_graph(v) {
            Ok(u) => {
                assert!(expected, "v={v} should be unrealizable");
                assert_eq!((u.v(), u.strand_count(), u.is_tight()), (v, 1, Ok(true)));
                assert!(u.is_lune_free(), "v={v}");
            }
            Err(_) => assert!(!expected, "v={v} should be realizable"),
        }
    }
}

#[test]
fn repeated_ladders_on_wheels() {
    let mut g = wheel(5).unwrap();
    for _ in 0..3 {
        let d = (0..g.map().dart_count()).find(|&d| g.map().degree(g.map().vertex_of(d)) == 3).unwrap();
        g = ladder(&g, RewriteSite::Vertex(d)).unwrap();
        assert_eq!(angle_components(&g), 1);
        assert!(medial(&g).unwrap().is_knot_graph());
    }
    assert_eq!(g.map().edge_count(), 10 + 36);
}

#[test]
fn polygon_family_sizes() {
    for p in 3..=7 {
        for n in 1..=4 {
            let u = polygon_family(p, n).unwrap();
            let rings = if p == 3 { n } else { n + 1 };
            assert_eq!(u.v(), p * rings, "p={p} n={n}");
            if p > 4 {
                assert_eq!(u.face_census().get(p), 2, "p={p} n={n}");
            }
        }
    }
}

#[test]
fn lune_counts_across_the_range() {
    for k in 0..=6 {
        let bound = if k % 2 == 0 { k + 8 } else { k + 9 };
        for v in bound..bound + 6 {
            let u = k_lune_graph(k, v).unwrap();
            assert_eq!((u.v(), u.lune_count(), u.strand_count()), (v, k, 1), "k={k} v={v}");
        }
        assert!(k_lune_graph(k, bound - 1).is_err());
    }
}

#[test]
fn twist_chains_are_universes() {
    let u = lune_free_knot_graph(14).unwrap();
    for k in [2, 4, 6] {
        let out = twist_chain(&u, RewriteSite::Vertex(5), k).unwrap();
        let again = as_universe(out.map().clone()).unwrap();
        assert_eq!(again.strand_count(), 1);
        assert_eq!(again.lune_count(), k);
    }
}

#[test]
fn braid_sizes() {
    for k in 1..=2 {
        for m in 0..=5 {
            for l in 0..=1 {
                let u = braid_shadow(k, m, l).unwrap();
                assert_eq!(u.v(), 3 * (4 * k - 1) + 2 * m + l);
            }
        }
    }
}
