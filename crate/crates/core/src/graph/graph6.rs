//! graph6 encoding: upper-triangle adjacency bits in column order
//! `(0,1),(0,2),(1,2),(0,3),..`, packed big-endian into 6-bit groups, each
//! group offset by 63. Orders above 62 use the `~`-prefixed long forms.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order accepted by [`parse_graph6`] and [`serialize_graph6`].
pub const MAX_GRAPH6_ORDER: usize = (1 << 18) - 1;

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn sixbits(bytes: &[u8], at: usize) -> Result<u64> {
    let b = *bytes
        .get(at)
        .ok_or_else(|| parse_err(at, "unexpected end of input"))?;
    if !(63..=126).contains(&b) {
        return Err(parse_err(
            at,
            format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
        ));
    }
    Ok(u64::from(b - 63))
}

/// Parses one graph6 string. An optional `>>graph6<<` header is skipped.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };

    let first = sixbits(bytes, pos)?;
    let n = if first < 63 {
        pos += 1;
        first as usize
    } else if bytes.get(pos + 1) != Some(&126) {
        let mut x = 0;
        for i in 1..=3 {
            x = x << 6 | sixbits(bytes, pos + i)?;
        }
        pos += 4;
        x as usize
    } else {
        let mut x = 0u64;
        for i in 2..=7 {
            x = x << 6 | sixbits(bytes, pos + i)?;
        }
        if x > MAX_GRAPH6_ORDER as u64 {
            return Err(parse_err(
                pos,
                format!("order {x} exceeds supported maximum {MAX_GRAPH6_ORDER}"),
            ));
        }
        pos += 8;
        x as usize
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() != nbytes {
        let offset = pos + body.len().min(nbytes);
        return Err(parse_err(
            offset,
            format!(
                "expected {nbytes} edge bytes for order {n}, found {}",
                body.len()
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let (mut i, mut j) = (0usize, 1usize);
    for k in 0..nbytes {
        let group = sixbits(bytes, pos + k)?;
        for b in (0..6).rev() {
            let bit_index = k * 6 + (5 - b);
            let set = group >> b & 1 == 1;
            if bit_index >= nbits {
                if set {
                    return Err(parse_err(pos + k, "nonzero padding bits"));
                }
                continue;
            }
            if set {
                g.add_edge(i, j);
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(g)
}

/// Canonical graph6 encoding with zero padding, no header.
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_GRAPH6_ORDER, "order {n} too large for graph6");
    let mut out: Vec<u8> = Vec::with_capacity(8 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}
