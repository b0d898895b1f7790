//! The graph6 ASCII encoding of simple undirected graphs, as used by
//! nauty and the House of Graphs. One graph per line; the upper triangle
//! of the adjacency matrix is packed column by column into 6-bit groups.

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

const OFFSET: u8 = 63;
const LONG_MARK: u8 = 126; // '~'

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. Supports the single-byte header (n <= 62)
/// and the 3-byte long form (n <= 258047); the 8-byte form is rejected.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes: &[u8] = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=LONG_MARK).contains(&b) {
            return Err(err(i, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }

    let (n, body_start) = if bytes[0] == LONG_MARK {
        if bytes.len() >= 2 && bytes[1] == LONG_MARK {
            return Err(err(1, "8-byte vertex-count form is not supported"));
        }
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated long-form vertex count"));
        }
        let n = ((bytes[1] - OFFSET) as usize) << 12
            | ((bytes[2] - OFFSET) as usize) << 6
            | (bytes[3] - OFFSET) as usize;
        (n, 4)
    } else {
        ((bytes[0] - OFFSET) as usize, 1)
    };

    if n == 0 {
        return Err(err(0, "graph6 encodes zero vertices; graphs need n >= 1"));
    }

    let bit_count = n * (n - 1) / 2;
    let body_len = bit_count.div_ceil(6);
    let have = bytes.len() - body_start;
    if have < body_len {
        return Err(err(
            bytes.len(),
            format!("truncated edge data: expected {body_len} bytes, found {have}"),
        ));
    }
    if have > body_len {
        return Err(err(body_start + body_len, "trailing garbage after edge data"));
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = bytes[body_start + bit_index / 6] - OFFSET;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((u, v));
            }
            bit_index += 1;
            if bit_index == bit_count {
                break 'outer;
            }
        }
    }

    // Canonical encodings zero-pad the final byte.
    if body_len > 0 {
        let last = bytes[body_start + body_len - 1] - OFFSET;
        let used = bit_count - 6 * (body_len - 1);
        let pad_mask = (1u8 << (6 - used)) - 1;
        if last & pad_mask != 0 {
            return Err(err(body_start + body_len - 1, "nonzero padding bits"));
        }
    }

    Graph::new(n, edges)
}

/// Canonical graph6 encoding: short header when n <= 62, zero-padded body.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(LONG_MARK);
        out.push(((n >> 12) & 0x3f) as u8 + OFFSET);
        out.push(((n >> 6) & 0x3f) as u8 + OFFSET);
        out.push((n & 0x3f) as u8 + OFFSET);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses a whole graph6 file: one graph per non-empty line. The optional
/// `>>graph6<<` header line is skipped.
pub fn parse_graph6_file(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with(">>graph6<<"))
        .map(parse_graph6)
        .collect()
}
