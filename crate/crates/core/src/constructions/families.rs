//! Infinite families: lune-free knot shadows of every order and knot
//! shadows with a prescribed number of lunes.

use crate::knot_graph::{as_universe, Universe};
use crate::planar_map::canonical_form;

use super::moves::{double_move, reidemeister_two, reidemeister_two_sites};
use super::named::knot_library;
use super::{check_knot, check_lune_free, ensure, ConstructionError, RewriteSite, Surgery};

/// Canonical relabelling, so that "least site" means the same thing for
/// every isomorphic input.
fn canonical(u: &Universe) -> Universe {
    as_universe(canonical_form(u.map())).expect("relabelling keeps a universe valid")
}

/// One double move at the least admissible edge of the canonical form.
fn grow(u: &Universe) -> Result<Universe, ConstructionError> {
    let u = canonical(u);
    let site = u
        .admissible_edges()
        .next()
        .ok_or_else(|| ConstructionError::Postcondition(format!("{}-crossing seed is not admissible", u.v())))?;
    let out = double_move(&u, RewriteSite::Edge(site))?;
    ensure(out.is_admissible() == Ok(true), || {
        format!("double move output with {} crossings lost admissibility", out.v())
    })?;
    Ok(out)
}

/// A lune-free knot shadow with exactly `v` crossings, for any `v ≥ 8`.
///
/// Orders 8 to 12 come from the shipped library. Larger odd orders grow
/// from the 11-crossing shadow and larger even orders from the first
/// 12-crossing one, two crossings per double move.
pub fn lune_free_knot_graph(v: usize) -> Result<Universe, ConstructionError> {
    if v < 8 {
        return Err(ConstructionError::TooSmall(v));
    }
    let mut u = if v <= 12 {
        knot_library(v).swap_remove(0)
    } else {
        let seed = if v % 2 == 1 { 11 } else { 12 };
        let mut u = knot_library(seed).swap_remove(0);
        while u.v() < v {
            u = grow(&u)?;
        }
        u
    };
    if v > 12 {
        u = canonical(&u);
    }
    check_lune_free(&u, "lune-free knot shadow")?;
    check_knot(&u, v, "lune-free knot shadow")?;
    Ok(u)
}

/// Replaces the crossing at `site` by a twisted chain of `k + 1` crossings
/// joined by `k` lunes. Reading the rotation from the site dart as
/// `n0 n1 n2 n3`, the chain runs from the `n0 n1` side to the `n2 n3` side.
/// An even `k` keeps the strands passing straight through the chain, so the
/// strand count is unchanged; an odd `k` swaps them.
pub fn twist_chain(u: &Universe, site: RewriteSite, k: usize) -> Result<Universe, ConstructionError> {
    let map = u.map();
    site.check(map)?;
    let RewriteSite::Vertex(d0) = site else {
        return Err(ConstructionError::BadSite("a twist chain needs a vertex".into()));
    };
    if k == 0 {
        return Ok(u.clone());
    }
    let z = map.vertex_of(d0);
    if map.darts_of(z).any(|d| map.vertex_of(map.alpha(d)) == z) {
        return Err(ConstructionError::BadSite(format!("vertex {z} carries a loop")));
    }
    let mut s = Surgery::new(map);
    let n: Vec<u32> = (0..4)
        .map(|i| s.label(map, (0..i).fold(d0, |d, _| map.sigma(d))))
        .collect();
    let upper: Vec<u32> = (0..k).map(|_| s.fresh()).collect();
    let lower: Vec<u32> = (0..k).map(|_| s.fresh()).collect();
    s.remove_vertex(z);
    s.push_vertex(vec![n[0], n[1], upper[0], lower[0]]);
    for i in 1..k {
        s.push_vertex(vec![lower[i - 1], upper[i - 1], upper[i], lower[i]]);
    }
    s.push_vertex(vec![lower[k - 1], upper[k - 1], n[2], n[3]]);
    let out = s.universe()?;
    ensure(out.v() == u.v() + k, || "twist chain vertex count".into())?;
    ensure(out.lune_count() == u.lune_count() + k, || {
        format!("twist chain made {} lunes from {}", out.lune_count(), u.lune_count())
    })?;
    if k % 2 == 0 {
        ensure(out.strand_count() == u.strand_count(), || "even twist chain changed the strand count".into())?;
    }
    Ok(out)
}

/// A knot shadow with `v` crossings and exactly `k` lunes.
///
/// Exists when `k` is even and `v ≥ k + 8`, or `k` is odd and `v ≥ k + 9`.
/// Even `k` puts a twist chain of `k` lunes on a lune-free knot shadow with
/// `v − k` crossings. `k = 1` pushes one edge of a face over another edge of
/// the same face. Odd `k ≥ 3` adds a chain of `k − 1` lunes, away from the
/// lune, to a one-lune shadow.
pub fn k_lune_graph(k: usize, v: usize) -> Result<Universe, ConstructionError> {
    let bound = if k % 2 == 0 { k + 8 } else { k + 9 };
    if v < bound {
        return Err(ConstructionError::BadParams(format!(
            "a knot shadow with {k} lunes needs at least {bound} crossings, got {v}"
        )));
    }
    let out = match k {
        0 => lune_free_knot_graph(v)?,
        1 => {
            let base = canonical(&lune_free_knot_graph(v - 2)?);
            let site = reidemeister_two_sites(&base)
                .into_iter()
                .next()
                .ok_or_else(|| ConstructionError::Postcondition("no face with two disjoint edges".into()))?;
            reidemeister_two(&base, site)?
        }
        k if k % 2 == 0 => {
            let base = canonical(&lune_free_knot_graph(v - k)?);
            twist_chain(&base, RewriteSite::Vertex(0), k)?
        }
        k => {
            let base = canonical(&k_lune_graph(1, v - k + 1)?);
            let map = base.map();
            let faces = map.faces();
            let on_lune = |x: usize| map.darts_of(x).any(|d| faces.degree(faces.face_of[d]) == 2);
            let z = (0..base.v())
                .find(|&x| !on_lune(x))
                .ok_or_else(|| ConstructionError::Postcondition("every vertex touches the lune".into()))?;
            twist_chain(&base, RewriteSite::Vertex(map.darts_of(z).start), k - 1)?
        }
    };
    let out = canonical(&out);
    check_knot(&out, v, "k-lune shadow")?;
    ensure(out.lune_count() == k, || format!("{} lunes, expected {k}", out.lune_count()))?;
    ensure(out.face_census().get(1) == 0, || "k-lune shadow has a loop".into())?;
    let census = out.face_census();
    ensure(2 * census.get(2) as i64 + census.triangle_excess() == 0, || {
        format!("census {census} breaks the lune-triangle identity")
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::g8;
    use crate::planar_map::isomorphic;

    #[test]
    fn small_orders() {
        assert_eq!(lune_free_knot_graph(7), Err(ConstructionError::TooSmall(7)));
        assert!(isomorphic(lune_free_knot_graph(8).unwrap().map(), g8().map()));
    }

    #[test]
    fn chain_to_twenty_five() {
        let u = lune_free_knot_graph(25).unwrap();
        assert_eq!(u.v(), 25);
        assert!(u.is_lune_free() && u.is_knot_graph());
        assert_eq!(u.is_admissible(), Ok(true));
    }

    #[test]
    fn deterministic_output() {
        assert_eq!(lune_free_knot_graph(20).unwrap(), lune_free_knot_graph(20).unwrap());
    }

    #[test]
    fn twist_chain_parity() {
        let u = g8();
        for k in 1..=5 {
            let out = twist_chain(&u, RewriteSite::Vertex(0), k).unwrap();
            assert_eq!(out.v(), 8 + k);
            assert_eq!(out.lune_count(), k);
            if k % 2 == 0 {
                assert_eq!(out.strand_count(), 1);
            }
        }
    }

    #[test]
    fn k_lune_examples() {
        let u = k_lune_graph(0, 10).unwrap();
        assert!(u.is_lune_free() && u.is_knot_graph());
        let u = k_lune_graph(1, 10).unwrap();
        assert_eq!((u.v(), u.lune_count(), u.strand_count()), (10, 1, 1));
        assert!(matches!(k_lune_graph(6, 13), Err(ConstructionError::BadParams(_))));
        assert!(matches!(k_lune_graph(1, 9), Err(ConstructionError::BadParams(_))));
        let u = k_lune_graph(3, 12).unwrap();
        assert_eq!((u.v(), u.lune_count(), u.strand_count()), (12, 3, 1));
    }
}
