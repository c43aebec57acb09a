use lunefree::constructions::{crossing_device, crossing_device_sites, double_move, lune_free_knot_graph};
use lunefree::constructions::RewriteSite;
use lunefree::enumerate::random_plane_graph;
use lunefree::io::{parse_uni, write_uni};
use lunefree::knot_graph::{FaceCensus, Universe};
use lunefree::medial::{angle_components, medial, premedial_default, PlaneGraph};
use lunefree::planar_map::{canonical_code, isomorphic, PlanarMap};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn plane_graph(seed: u64, e: usize) -> PlaneGraph {
    random_plane_graph(&mut ChaCha8Rng::seed_from_u64(seed), e)
}

/// Strand count by union-find over edges: at each vertex the edges in
/// opposite slots belong to the same strand.
fn strands_by_edges(map: &PlanarMap) -> usize {
    let mut parent: Vec<usize> = (0..map.edge_count()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for v in 0..map.vertex_count() {
        let darts: Vec<usize> = map.darts_of(v).collect();
        for i in 0..2 {
            let a = find(&mut parent, map.edge_of(darts[i]));
            let b = find(&mut parent, map.edge_of(darts[i + 2]));
            parent[a] = b;
        }
    }
    (0..map.edge_count()).filter(|&e| find(&mut parent, e) == e).count()
}

/// Rotation lists shuffled: vertices permuted, rotations shifted, labels
/// offset. The result is the same plane map.
fn scrambled(map: &PlanarMap, seed: u64) -> PlanarMap {
    use rand::seq::SliceRandom;
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..map.vertex_count()).collect();
    order.shuffle(&mut rng);
    let shifts: Vec<usize> = order.iter().map(|&v| rng.gen_range(0..map.degree(v))).collect();
    map.relabeled(&order, &shifts, |l| l * 3 + 7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn angle_cycles_count_medial_strands(seed in any::<u64>(), e in 2usize..30) {
        let g = plane_graph(seed, e);
        let u = medial(&g).unwrap();
        prop_assert_eq!(u.v(), e);
        prop_assert_eq!(angle_components(&g), u.strand_count());
        prop_assert_eq!(strands_by_edges(u.map()), u.strand_count());
    }

    #[test]
    fn dual_graphs_share_a_medial(seed in any::<u64>(), e in 2usize..30) {
        let g = plane_graph(seed, e);
        let a = medial(&g).unwrap();
        let b = medial(&g.dual()).unwrap();
        prop_assert!(isomorphic(a.map(), b.map()));
    }

    #[test]
    fn premedial_inverts_medial(seed in any::<u64>(), e in 2usize..30) {
        let g = plane_graph(seed, e);
        let back = premedial_default(&medial(&g).unwrap());
        prop_assert!(isomorphic(back.map(), g.map()) || isomorphic(back.map(), g.dual().map()));
    }

    #[test]
    fn medial_census_matches_degrees(seed in any::<u64>(), e in 2usize..30) {
        // faces of the medial are the vertices and faces of G
        let g = plane_graph(seed, e);
        let census = medial(&g).unwrap().face_census();
        let mut pairs = std::collections::BTreeMap::new();
        for d in g.map().degrees() {
            *pairs.entry(d).or_insert(0) += 1;
        }
        for d in g.dual().map().degrees() {
            *pairs.entry(d).or_insert(0) += 1;
        }
        let pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        prop_assert_eq!(census, FaceCensus::from_pairs(&pairs));
    }

    #[test]
    fn census_identity(seed in any::<u64>(), e in 2usize..30) {
        let u = medial(&plane_graph(seed, e)).unwrap();
        let c = u.face_census();
        prop_assert_eq!(c.faces(), u.v() + 2);
        prop_assert_eq!(c.degree_sum(), 4 * u.v());
        prop_assert_eq!(c.general_excess(), 0);
    }

    #[test]
    fn uni_round_trip(seed in any::<u64>(), e in 2usize..30) {
        let u = medial(&plane_graph(seed, e)).unwrap();
        let text = write_uni(u.map());
        let back = parse_uni(&text).unwrap();
        prop_assert_eq!(write_uni(&back), text);
        prop_assert!(isomorphic(&back, u.map()));
    }

    #[test]
    fn canonical_code_ignores_labels(seed in any::<u64>(), shuffle in any::<u64>(), e in 2usize..24) {
        let u = medial(&plane_graph(seed, e)).unwrap();
        let other = scrambled(u.map(), shuffle);
        prop_assert_eq!(canonical_code(u.map(), true), canonical_code(&other, true));
        prop_assert_eq!(canonical_code(u.map(), false), canonical_code(&other, false));
        prop_assert_eq!(canonical_code(u.map(), true), canonical_code(&u.map().mirror(), true));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn double_moves_stay_lune_free(v in 13usize..22, pick in any::<prop::sample::Index>()) {
        let u = lune_free_knot_graph(v).unwrap();
        let sites: Vec<usize> = u.admissible_edges().collect();
        prop_assume!(!sites.is_empty());
        let out: Universe = double_move(&u, RewriteSite::Edge(sites[pick.index(sites.len())])).unwrap();
        prop_assert_eq!(out.v(), v + 2);
        prop_assert!(out.is_lune_free());
        prop_assert_eq!(out.strand_count(), 1);
        let c = out.face_census();
        prop_assert_eq!(c.triangle_excess(), 0);
    }

    #[test]
    fn crossing_devices_add_one_crossing(v in 8usize..18, pick in any::<prop::sample::Index>()) {
        let u = lune_free_knot_graph(v).unwrap();
        let sites = crossing_device_sites(&u);
        prop_assume!(!sites.is_empty());
        let out = crossing_device(&u, sites[pick.index(sites.len())]).unwrap();
        prop_assert_eq!(out.v(), v + 1);
        prop_assert!(out.is_lune_free());
        prop_assert_eq!(strands_by_edges(out.map()), out.strand_count());
    }
}
