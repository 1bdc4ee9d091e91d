//! graph6 (short form) and plain edge-list text formats.
//!
//! graph6: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits
//! per byte, each byte offset by 63, padded with zero bits.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-indexed
//! vertices separated by whitespace.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order expressible in the one-byte graph6 header.
pub const GRAPH6_MAX_N: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };

    let &head = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(63..=126).contains(&head) {
        return Err(err(0, "invalid size byte"));
    }
    let n = (head - 63) as usize;
    if n > GRAPH6_MAX_N {
        return Err(err(0, "only the short form (n <= 62) is supported"));
    }
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < expected {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if body.len() > expected {
        return Err(err(1 + expected, "trailing bytes after adjacency data"));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + i, "invalid adjacency character"));
        }
        let chunk = b - 63;
        bits.extend((0..6).rev().map(|shift| (chunk >> shift) & 1 == 1));
    }
    let mut pairs = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                pairs.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &pairs)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Infeasible(format!(
            "graph6 short form holds at most {GRAPH6_MAX_N} vertices, got {n}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, reason: String| Error::EdgeList { line, reason };

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header".into()))?;
    let header: Vec<&str> = header.split_whitespace().collect();
    let [n, m] = header[..] else {
        return Err(err(header_line, "header must be `n m`".into()));
    };
    let parse = |line: usize, field: &str| {
        field
            .parse::<usize>()
            .map_err(|_| err(line, format!("not a non-negative integer: {field:?}")))
    };
    let n = parse(header_line, n)?;
    let m = parse(header_line, m)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(line, "edge line must be `u v`".into()));
        };
        pairs.push((parse(line, u)?, parse(line, v)?));
    }
    if pairs.len() != m {
        return Err(err(
            header_line,
            format!("header promises {m} edges, found {}", pairs.len()),
        ));
    }
    Graph::from_edges(n, &pairs)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
