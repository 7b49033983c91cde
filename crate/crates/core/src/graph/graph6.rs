//! graph6 codec, single-byte size form only (`n <= 62`).
//!
//! The body packs the upper triangle column by column (`x(0,1)`, `x(0,2)`,
//! `x(1,2)`, `x(0,3)`, ...) into 6-bit groups, most significant bit first,
//! each group offset by 63.

use super::{Graph, GraphError};

pub const GRAPH6_MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(GraphError::UnsupportedGraph6(n));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((group << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing line
/// terminator are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph, GraphError> {
    let mut bytes = text.strip_prefix(HEADER.as_bytes()).unwrap_or(text);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
    let (&first, body) = bytes.split_first().ok_or_else(|| bad("empty input"))?;
    if !(63..=126).contains(&first) {
        return Err(bad("size byte outside 63..=126"));
    }
    if first == 126 {
        // Multi-byte size form: `~` followed by 3 or 6 more size bytes.
        let n = match body {
            [126, a, b, c, d, e, f, ..] => [a, b, c, d, e, f].iter().fold(0usize, |acc, &&x| {
                (acc << 6) | (x.wrapping_sub(63) as usize & 63)
            }),
            [a, b, c, ..] if *a != 126 => [a, b, c].iter().fold(0usize, |acc, &&x| {
                (acc << 6) | (x.wrapping_sub(63) as usize & 63)
            }),
            _ => return Err(bad("truncated multi-byte size")),
        };
        if n <= GRAPH6_MAX_VERTICES {
            return Err(bad("non-minimal multi-byte size"));
        }
        return Err(GraphError::UnsupportedGraph6(n));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(&format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("data byte outside 63..=126"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        if !(63..=126).contains(&last) {
            return Err(bad("data byte outside 63..=126"));
        }
        let pad = expected * 6 - bits;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(bad("nonzero padding bits"));
        }
    }
    Graph::from_edges(n, &edges)
}
