//! The `.uni` rotation-system text format.
//!
//! ```text
//! # comments and blank lines are ignored
//! map v=3 e=6
//! 0: 0 3 5 2
//! 1: 1 4 3 0
//! 2: 2 5 4 1
//! ```
//!
//! Each vertex line lists edge ids counterclockwise. Every id must appear
//! exactly twice in the document.

use crate::planar_map::{build_map, MapError, PlanarMap};

use super::IoError;

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> IoError {
    IoError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses a `.uni` document. Line and column numbers in errors are 1-based.
pub fn parse_uni(text: &str) -> Result<PlanarMap, IoError> {
    let mut header: Option<(usize, usize)> = None;
    let mut header_line = 1;
    let mut rows: Vec<Option<Vec<u32>>> = Vec::new();
    let mut edge_ids = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let content = content.trim_end();
        let Some((v, _)) = header else {
            header = Some(parse_header(content.trim_start(), line_no, indent)?);
            rows = vec![None; header.unwrap().0];
            header_line = line_no;
            continue;
        };
        let colon = content
            .find(':')
            .ok_or_else(|| syntax(line_no, indent + 1, "expected `<vertex>: <edge ids>`"))?;
        let vertex_text = content[..colon].trim();
        let vertex: usize = vertex_text
            .parse()
            .map_err(|_| syntax(line_no, indent + 1, format!("bad vertex index `{vertex_text}`")))?;
        if vertex >= v {
            return Err(syntax(
                line_no,
                indent + 1,
                format!("vertex {vertex} out of range for v={v}"),
            ));
        }
        if rows[vertex].is_some() {
            return Err(syntax(line_no, indent + 1, format!("vertex {vertex} listed twice")));
        }
        let mut labels = Vec::new();
        let mut i = colon + 1;
        let bytes = content.as_bytes();
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let token = &content[start..i];
            let label: u32 = token
                .parse()
                .map_err(|_| syntax(line_no, start + 1, format!("bad edge id `{token}`")))?;
            labels.push(label);
        }
        edge_ids += labels.len();
        rows[vertex] = Some(labels);
    }

    let (v, e) = header.ok_or_else(|| syntax(1, 1, "missing `map v=<V> e=<E>` header"))?;
    let rotations: Vec<Vec<u32>> = rows
        .into_iter()
        .enumerate()
        .map(|(i, r)| r.ok_or_else(|| syntax(header_line, 1, format!("vertex {i} has no rotation line"))))
        .collect::<Result<_, _>>()?;
    if edge_ids != 2 * e {
        return Err(syntax(
            header_line,
            1,
            format!("header declares e={e} but rotations hold {edge_ids} edge ends"),
        ));
    }
    debug_assert_eq!(rotations.len(), v);
    build_map(&rotations).map_err(|err| match err {
        MapError::DuplicateEdgeUse { label, count } => IoError::EdgeCount { label, count },
        other => IoError::Map(other),
    })
}

fn parse_header(line: &str, line_no: usize, indent: usize) -> Result<(usize, usize), IoError> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some("map") {
        return Err(syntax(line_no, indent + 1, "expected `map v=<V> e=<E>`"));
    }
    let mut field = |name: &str| -> Result<usize, IoError> {
        let part = parts
            .next()
            .ok_or_else(|| syntax(line_no, line.len() + indent + 1, format!("missing `{name}=`")))?;
        let col = line.find(part).unwrap() + indent + 1;
        part.strip_prefix(name)
            .and_then(|s| s.strip_prefix('='))
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| syntax(line_no, col, format!("expected `{name}=<count>`, found `{part}`")))
    };
    let v = field("v")?;
    let e = field("e")?;
    if let Some(extra) = parts.next() {
        let col = line.rfind(extra).unwrap() + indent + 1;
        return Err(syntax(line_no, col, format!("unexpected `{extra}`")));
    }
    if v == 0 {
        return Err(syntax(line_no, indent + 1, "a map needs at least one vertex"));
    }
    Ok((v, e))
}

/// Writes the normalized document: header, then one line per vertex in
/// index order, LF line endings.
pub fn write_uni(map: &PlanarMap) -> String {
    let mut out = format!("map v={} e={}\n", map.vertex_count(), map.edge_count());
    for (v, rotation) in map.rotations().iter().enumerate() {
        out.push_str(&v.to_string());
        out.push(':');
        for label in rotation {
            out.push(' ');
            out.push_str(&label.to_string());
        }
        out.push('\n');
    }
    out
}
