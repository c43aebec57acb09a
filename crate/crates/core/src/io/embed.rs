//! Tutte's barycentric embedding.

use nalgebra::{DMatrix, DVector};

use crate::planar_map::PlanarMap;

use super::IoError;

/// Vertex coordinates, dimensionless.
#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub coords: Vec<(f64, f64)>,
    /// Largest absolute residual of the barycentric equations.
    pub residual: f64,
}

const RESIDUAL_TOLERANCE: f64 = 1e-9;

fn connected_without(map: &PlanarMap, removed: &[usize]) -> bool {
    let n = map.vertex_count();
    let Some(start) = (0..n).find(|v| !removed.contains(v)) else {
        return true;
    };
    let mut seen = vec![false; n];
    for &r in removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for w in map.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached + removed.len() == n
}

/// At least four vertices and no separating set of two vertices.
pub fn is_three_connected(map: &PlanarMap) -> bool {
    let n = map.vertex_count();
    if n < 4 || !map.is_connected() {
        return false;
    }
    for a in 0..n {
        for b in a + 1..n {
            if !connected_without(map, &[a, b]) {
                return false;
            }
        }
    }
    true
}

/// Places the given face on a regular polygon and every other vertex at the
/// average of its neighbours.
pub fn tutte_embed(map: &PlanarMap, outer_face: usize) -> Result<Embedding, IoError> {
    if !map.is_simple() || !is_three_connected(map) {
        return Err(IoError::NotThreeConnected);
    }
    let faces = map.faces();
    let cycle = faces.cycles.get(outer_face).ok_or(IoError::BadFace(outer_face))?;
    let n = map.vertex_count();
    let mut fixed: Vec<Option<(f64, f64)>> = vec![None; n];
    let k = cycle.len() as f64;
    for (i, &d) in cycle.iter().enumerate() {
        let angle = std::f64::consts::TAU * i as f64 / k;
        fixed[map.vertex_of(d)] = Some((angle.cos(), angle.sin()));
    }

    let interior: Vec<usize> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in interior.iter().enumerate() {
        index[v] = i;
    }
    let m = interior.len();
    let mut a = DMatrix::<f64>::zeros(m, m);
    let mut bx = DVector::<f64>::zeros(m);
    let mut by = DVector::<f64>::zeros(m);
    for (i, &v) in interior.iter().enumerate() {
        a[(i, i)] = map.degree(v) as f64;
        for w in map.neighbors(v) {
            match fixed[w] {
                Some((x, y)) => {
                    bx[i] += x;
                    by[i] += y;
                }
                None => a[(i, index[w])] -= 1.0,
            }
        }
    }
    let lu = a.clone().lu();
    let (sx, sy) = match (lu.solve(&bx), lu.solve(&by)) {
        (Some(sx), Some(sy)) => (sx, sy),
        _ => return Err(IoError::SingularSystem(f64::INFINITY)),
    };
    let residual = (&a * &sx - &bx)
        .amax()
        .max((&a * &sy - &by).amax());
    if !residual.is_finite() || residual >= RESIDUAL_TOLERANCE {
        return Err(IoError::SingularSystem(residual));
    }
    let coords = (0..n)
        .map(|v| fixed[v].unwrap_or_else(|| (sx[index[v]], sy[index[v]])))
        .collect();
    Ok(Embedding { coords, residual })
}

fn orient(p: (f64, f64), q: (f64, f64), r: (f64, f64)) -> f64 {
    (q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)
}

fn segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64), tol: f64) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol))
        && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol))
}

/// Number of pairs of straight edges without a common endpoint that
/// properly intersect.
pub fn count_crossings(map: &PlanarMap, emb: &Embedding, tol: f64) -> usize {
    let edges: Vec<(usize, usize)> = (0..map.edge_count()).map(|e| map.endpoints(e)).collect();
    let mut count = 0;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if segments_cross(emb.coords[a], emb.coords[b], emb.coords[c], emb.coords[d], tol) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{build_map, fixtures};

    #[test]
    fn octahedron_drawing() {
        let m = fixtures::octahedron();
        let emb = tutte_embed(&m, 0).unwrap();
        assert!(emb.residual < 1e-9);
        assert_eq!(count_crossings(&m, &emb, 1e-9), 0);
        for i in 0..6 {
            for j in i + 1..6 {
                let (p, q) = (emb.coords[i], emb.coords[j]);
                assert!((p.0 - q.0).hypot(p.1 - q.1) > 1e-9);
            }
        }
    }

    #[test]
    fn path_is_rejected() {
        let path = build_map(&[vec![0], vec![0, 1], vec![1]]).unwrap();
        assert_eq!(tutte_embed(&path, 0), Err(IoError::NotThreeConnected));
        assert!(!is_three_connected(&path));
    }

    #[test]
    fn missing_face() {
        assert_eq!(tutte_embed(&fixtures::octahedron(), 8), Err(IoError::BadFace(8)));
    }
}
