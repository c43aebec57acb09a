//! Named universes: shipped shadows and the concentric polygon family.

use crate::knot_graph::{as_universe, FaceCensus, Universe};
use crate::planar_map::build_map;

use super::data::load;
use super::{check_lune_free, ensure, ConstructionError};

fn shipped(name: &str) -> Universe {
    let map = load(name).unwrap_or_else(|e| panic!("shipped file {name} is corrupt: {e}"));
    as_universe(map).unwrap_or_else(|e| panic!("shipped file {name} is not a universe: {e}"))
}

/// Asserts a property of shipped data; a failure means the repository itself is broken.
fn verified(name: &str, u: Universe, check: impl FnOnce(&Universe) -> Result<(), ConstructionError>) -> Universe {
    if let Err(e) = check(&u) {
        panic!("shipped file {name} fails verification: {e}");
    }
    u
}

/// The octahedral shadow of the three-circle Venn diagram: six crossings,
/// eight triangles, three strands, tight.
pub fn venn() -> Universe {
    verified("venn", shipped("venn"), |u| {
        check_lune_free(u, "venn")?;
        ensure(u.v() == 6 && u.face_census() == FaceCensus::from_pairs(&[(3, 8)]), || {
            format!("census {}", u.face_census())
        })?;
        ensure(u.strand_count() == 3, || format!("{} strands", u.strand_count()))?;
        ensure(u.is_tight() == Ok(true), || "not tight".into())
    })
}

/// The smallest lune-free knot shadow: the square antiprism, with eight
/// triangles and two squares.
pub fn g8() -> Universe {
    verified("knot_8", shipped("knot_8"), |u| {
        check_lune_free(u, "g8")?;
        ensure(u.face_census() == FaceCensus::from_pairs(&[(3, 8), (4, 2)]), || {
            format!("census {}", u.face_census())
        })?;
        ensure(u.is_knot_graph(), || format!("{} strands", u.strand_count()))?;
        ensure(u.is_tight() == Ok(true), || "not tight".into())
    })
}

/// All lune-free knot shadows with `v` crossings for `8 ≤ v ≤ 12`, in
/// canonical-code order (one each for 8 through 11, three for 12). Other
/// orders return an empty list.
pub fn knot_library(v: usize) -> Vec<Universe> {
    let names: &[&str] = match v {
        8 => &["knot_8"],
        9 => &["knot_9"],
        10 => &["knot_10"],
        11 => &["knot_11"],
        12 => &["knot_12a", "knot_12b", "knot_12c"],
        _ => &[],
    };
    names
        .iter()
        .map(|&name| {
            verified(name, shipped(name), |u| {
                check_lune_free(u, name)?;
                ensure(u.v() == v, || format!("{} vertices", u.v()))?;
                ensure(u.is_knot_graph(), || format!("{} strands", u.strand_count()))
            })
        })
        .collect()
}

/// A tight lune-free link shadow with twelve crossings and three strands:
/// the medial of the six-spoke wheel.
pub fn tight_link_graph_12() -> Universe {
    verified("tight_link_12", shipped("tight_link_12"), |u| {
        check_lune_free(u, "tight_link_12")?;
        ensure(u.v() == 12, || format!("{} vertices", u.v()))?;
        ensure(u.strand_count() == 3, || format!("{} strands", u.strand_count()))?;
        ensure(u.is_tight() == Ok(true), || "not tight".into())
    })
}

/// Concentric rings of `p`-gons joined in antiprism fashion.
///
/// There are `n` rings for `p = 3` and `n + 1` rings otherwise, so
/// `polygon_family(3, n)` has `3n` crossings and `polygon_family(4, n)` has
/// `4n + 4`. The innermost and outermost rings are cycles; consecutive rings
/// are joined by a zigzag of `2p` edges. `polygon_family(3, 1)` is the
/// trefoil shadow and has lunes; every other member is lune-free.
pub fn polygon_family(p: usize, n: usize) -> Result<Universe, ConstructionError> {
    if p < 3 || n < 1 {
        return Err(ConstructionError::BadParams(format!(
            "polygon family needs p ≥ 3 and n ≥ 1, got p={p}, n={n}"
        )));
    }
    let rings = if p == 3 { n } else { n + 1 };
    // edge labels: zigzag A(l,i): (l,i)-(l+1,i) and B(l,i): (l,i)-(l+1,i-1),
    // then the inner cycle C(i) and the outer cycle D(i) joining i to i+1
    let zig = (rings - 1) * p;
    let a = |l: usize, i: usize| (l * p + i % p) as u32;
    let b = |l: usize, i: usize| (zig + l * p + i % p) as u32;
    let c = |i: usize| (2 * zig + i % p) as u32;
    let d = |i: usize| (2 * zig + p + i % p) as u32;
    let mut rotations = Vec::with_capacity(rings * p);
    for l in 0..rings {
        for i in 0..p {
            let behind = i + p - 1;
            let last = l + 1 == rings;
            let out_ahead = if last { d(i) } else { a(l, i) };
            let out_behind = if last { d(behind) } else { b(l, i) };
            let in_ahead = if l == 0 { c(i) } else { b(l - 1, i + 1) };
            let in_behind = if l == 0 { c(behind) } else { a(l - 1, i) };
            rotations.push(vec![out_ahead, in_ahead, in_behind, out_behind]);
        }
    }
    let u = as_universe(build_map(&rotations)?)?;
    let expected_v = if p == 3 { 3 * n } else { p * (n + 1) };
    ensure(u.v() == expected_v, || format!("polygon family has {} vertices", u.v()))?;
    if p > 3 || n > 1 {
        check_lune_free(&u, "polygon family")?;
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::medial::{medial, wheel};
    use crate::planar_map::isomorphic;

    #[test]
    fn shipped_graphs_load() {
        assert_eq!(venn().v(), 6);
        assert_eq!(g8().is_admissible(), Ok(false));
        let counts: Vec<usize> = (7..=13).map(|v| knot_library(v).len()).collect();
        assert_eq!(counts, vec![0, 1, 1, 1, 1, 3, 0]);
        assert_eq!(
            tight_link_graph_12().face_census(),
            FaceCensus::from_pairs(&[(3, 12), (6, 2)])
        );
    }

    #[test]
    fn tight_link_is_the_six_wheel_medial() {
        let m = medial(&wheel(6).unwrap()).unwrap();
        assert!(isomorphic(m.map(), tight_link_graph_12().map()));
    }

    #[test]
    fn small_family_members() {
        assert!(isomorphic(polygon_family(4, 1).unwrap().map(), g8().map()));
        assert!(isomorphic(polygon_family(3, 2).unwrap().map(), venn().map()));
        let trefoil = polygon_family(3, 1).unwrap();
        assert_eq!((trefoil.v(), trefoil.lune_count(), trefoil.strand_count()), (3, 3, 1));
        assert!(matches!(polygon_family(2, 3), Err(ConstructionError::BadParams(_))));
        assert!(matches!(polygon_family(5, 0), Err(ConstructionError::BadParams(_))));
    }

    #[test]
    fn triangle_family_strand_counts() {
        for n in 2..=12 {
            let u = polygon_family(3, n).unwrap();
            let expected = if n % 3 == 2 { 3 } else { 1 };
            assert_eq!((u.v(), u.strand_count()), (3 * n, expected), "n={n}");
        }
    }

    #[test]
    fn square_family_knots() {
        for n in [1, 3, 5, 7] {
            let u = polygon_family(4, n).unwrap();
            assert_eq!((u.v(), u.strand_count()), (4 * n + 4, 1), "n={n}");
        }
    }

    #[test]
    fn pentagon_family_is_lune_free() {
        for n in 1..=6 {
            let u = polygon_family(5, n).unwrap();
            assert!(u.is_lune_free());
            assert_eq!(u.face_census().get(5), 2);
        }
    }
}
