//! Graph serialization: graph6, plain edge lists, and DOT export.
//!
//! graph6 layout: a header N(n), then the upper triangle of the adjacency
//! matrix in column order x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) ...,
//! packed big-endian six bits per byte with 63 added to every byte. Orders
//! up to 62 use the one-byte header `n + 63`; larger orders use `~` plus
//! three bytes carrying 18 bits. Parsing is strict: exact length, bytes in
//! `63..=126`, zero padding bits, and errors carry the byte offset.

use crate::graph::{Edge, Graph, MAX_ORDER};
use crate::{Error, Result};
use std::fmt::Write as _;

fn g6_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Parse one graph6 string (a trailing newline is tolerated).
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(
                i,
                format!("byte {b} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, body_start) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // Eight-byte header for orders >= 258048; far past the limit.
            return Err(g6_err(
                1,
                format!("order exceeds the {MAX_ORDER}-vertex limit"),
            ));
        }
        if bytes.len() < 4 {
            return Err(g6_err(bytes.len(), "truncated long-form order header"));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    if n == 0 || n > MAX_ORDER {
        return Err(g6_err(
            0,
            format!("order {n} outside the supported range 1..={MAX_ORDER}"),
        ));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != body_start + nbytes {
        return Err(g6_err(
            bytes.len().min(body_start + nbytes),
            format!(
                "expected {} adjacency bytes for order {n}, found {}",
                nbytes,
                bytes.len() - body_start
            ),
        ));
    }
    let mut g = Graph::new(n)?;
    for (bit, (u, v)) in upper_triangle(n).enumerate() {
        let byte = bytes[body_start + bit / 6];
        if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
            g.add_edge(u, v)?;
        }
    }
    // The final partial byte must be zero-padded.
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(g6_err(bytes.len() - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Emit the canonical graph6 encoding of `g`.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for (u, v) in upper_triangle(n) {
        acc = acc << 1 | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Upper-triangle pairs in graph6 column order.
fn upper_triangle(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v)))
}

/// Parse an edge list: an optional `order N` line, then one `u v` pair per
/// line. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(s: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, raw) in s.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |reason: &str| Error::EdgeList {
            line: i + 1,
            reason: reason.to_string(),
        };
        if let Some(rest) = line.strip_prefix("order") {
            if order.is_some() || !edges.is_empty() {
                return Err(err("order line must come first and appear once"));
            }
            order = Some(rest.trim().parse().map_err(|_| err("malformed order"))?);
            continue;
        }
        let mut it = line.split_whitespace();
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(err("expected exactly two vertex indices")),
        };
        let a: usize = a.parse().map_err(|_| err("malformed vertex index"))?;
        let b: usize = b.parse().map_err(|_| err("malformed vertex index"))?;
        edges.push((a, b));
    }
    let implied = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1);
    let n = order.unwrap_or(implied);
    Graph::from_edges(n, &edges).map_err(|e| match e {
        Error::Graph6 { .. } | Error::EdgeList { .. } => e,
        other => Error::EdgeList {
            line: 0,
            reason: other.to_string(),
        },
    })
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("order {}\n", g.order());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

/// DOT export. Edges in `dashed` render dashed (the contractible ones, by
/// convention); edges in `fat` render with a heavy pen (a spanning tree).
pub fn to_dot(g: &Graph, dashed: &[Edge], fat: &[Edge]) -> String {
    let dashed: std::collections::BTreeSet<Edge> = dashed.iter().copied().collect();
    let fat: std::collections::BTreeSet<Edge> = fat.iter().copied().collect();
    let mut out = String::from("graph {\n  node [shape=circle];\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    for e in g.edges() {
        let mut attrs = Vec::new();
        if dashed.contains(&e) {
            attrs.push("style=dashed");
        }
        if fat.contains(&e) {
            attrs.push("penwidth=2.5");
        }
        let suffix = if attrs.is_empty() {
            String::new()
        } else {
            format!(" [{}]", attrs.join(", "))
        };
        let _ = writeln!(out, "  {} -- {}{};", e.u(), e.v(), suffix);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        assert_eq!(emit_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(emit_graph6(&Graph::complete(5).unwrap()), "D~{");
        assert_eq!(emit_graph6(&Graph::new(1).unwrap()), "@");
    }

    #[test]
    fn parse_known_encodings() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse_graph6("D~{\n").unwrap(), Graph::complete(5).unwrap());
    }

    #[test]
    fn roundtrip_small_structures() {
        for g in [
            Graph::path(7).unwrap(),
            Graph::cycle(5).unwrap(),
            Graph::new(3).unwrap(),
            Graph::complete(11).unwrap(),
        ] {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_form_orders_roundtrip() {
        for n in [63, 64] {
            let g = Graph::cycle(n).unwrap();
            let enc = emit_graph6(&g);
            assert_eq!(enc.as_bytes()[0], 126);
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }

    #[test]
    fn rejects_order_above_limit() {
        // Long-form header declaring order 65 = 1*64 + 1.
        let mut s = String::from("~?@@");
        let body_bytes = (65 * 64 / 2usize).div_ceil(6);
        s.extend(std::iter::repeat_n('?', body_bytes));
        match parse_graph6(&s) {
            Err(Error::Graph6 { offset: 0, reason }) => assert!(reason.contains("65")),
            other => panic!("expected an order error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_bytes_with_offset() {
        match parse_graph6("C!") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected a byte-range error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_wrong_length() {
        assert!(matches!(parse_graph6("C~~"), Err(Error::Graph6 { .. })));
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn rejects_nonzero_padding() {
        // K2 with padding bits set: 100001 -> 33 + 63 = 96 = '`'.
        match parse_graph6("A`") {
            Err(Error::Graph6 { offset: 1, reason }) => assert!(reason.contains("padding")),
            other => panic!("expected a padding error, got {other:?}"),
        }
    }

    #[test]
    fn edge_list_roundtrip_and_errors() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 4)]).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        // Without a header the isolated vertices 2,3 are lost.
        assert_eq!(parse_edge_list("0 1\n1 4").unwrap().order(), 5);
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 x"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 0"),
            Err(Error::EdgeList { .. })
        ));
    }

    #[test]
    fn dot_marks_edge_classes() {
        let g = Graph::path(3).unwrap();
        let d = to_dot(
            &g,
            &[Edge::new(0, 1).unwrap()],
            &[Edge::new(0, 1).unwrap(), Edge::new(1, 2).unwrap()],
        );
        assert!(d.contains("0 -- 1 [style=dashed, penwidth=2.5];"));
        assert!(d.contains("1 -- 2 [penwidth=2.5];"));
        assert!(d.starts_with("graph {"));
    }
}
