//! File formats, exports, and straight-line layouts.

mod embed;
mod render;
mod uni;

use thiserror::Error;

use crate::planar_map::{MapError, PlanarMap};

pub use embed::{count_crossings, is_three_connected, tutte_embed, Embedding};
pub use render::{circular_layout, to_dot, to_svg};
pub use uni::{parse_uni, write_uni};

/// File header written before planar-code records.
pub const PLANAR_CODE_HEADER: &[u8] = b">>planar_code<<";

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IoError {
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("edge id {label} is used {count} times, expected 2")]
    EdgeCount { label: u32, count: usize },
    #[error("planar code needs a simple map")]
    NotSimple,
    #[error("planar code stores at most 255 vertices, got {0}")]
    TooLarge(usize),
    #[error("the map is not 3-connected")]
    NotThreeConnected,
    #[error("face {0} does not exist")]
    BadFace(usize),
    #[error("the barycentric system is singular or ill-conditioned (residual {0:e})")]
    SingularSystem(f64),
    #[error(transparent)]
    Map(#[from] MapError),
}

/// One planar-code record: the vertex count, then for each vertex its
/// 1-based neighbours in counterclockwise rotation order followed by 0.
pub fn export_planar_code(map: &PlanarMap) -> Result<Vec<u8>, IoError> {
    if !map.is_simple() {
        return Err(IoError::NotSimple);
    }
    let n = map.vertex_count();
    if n > 255 {
        return Err(IoError::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + n + map.dart_count());
    out.push(n as u8);
    for v in 0..n {
        out.extend(map.neighbors(v).map(|w| (w + 1) as u8));
        out.push(0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar_map::{build_map, fixtures};

    #[test]
    fn planar_code_layout() {
        let m = fixtures::octahedron();
        let bytes = export_planar_code(&m).unwrap();
        assert_eq!(bytes.len(), 1 + m.degrees().map(|d| d + 1).sum::<usize>());
        assert_eq!(bytes[0], 6);
        let lists: Vec<&[u8]> = bytes[1..].split(|&b| b == 0).filter(|s| !s.is_empty()).collect();
        assert_eq!(lists.len(), 6);
        assert!(lists.iter().all(|l| l.len() == 4));
    }

    #[test]
    fn planar_code_rejects_multigraphs() {
        let trefoil = build_map(&[vec![0, 3, 5, 2], vec![1, 4, 3, 0], vec![2, 5, 4, 1]]).unwrap();
        assert_eq!(export_planar_code(&trefoil), Err(IoError::NotSimple));
    }
}
