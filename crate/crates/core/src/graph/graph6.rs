//! graph6 short form (`n <= 62`).
//!
//! A size byte `n + 63` followed by the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per
//! byte, most significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_SHORT_FORM: usize = 62;

const HEADER: &[u8] = b">>graph6<<";

fn triangle_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_SHORT_FORM {
        return Err(Error::SizeLimit {
            what: "graph6 short form",
            size: n,
            limit: MAX_SHORT_FORM,
        });
    }
    let mut out = Vec::with_capacity(1 + triangle_bits(n).div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text.strip_prefix(HEADER).unwrap_or(text);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let (&size, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&size) {
        return Err(Error::Graph6(format!("size byte {size} out of range")));
    }
    if size == 126 {
        return Err(Error::Graph6(format!(
            "long form (n > {MAX_SHORT_FORM}) is not supported"
        )));
    }
    let n = (size - 63) as usize;
    let bits = triangle_bits(n);
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut values = Vec::with_capacity(body.len());
    for (pos, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} at offset {} out of range", pos + 1)));
        }
        values.push(b - 63);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
