//! graph6: printable ASCII, 6 bits per byte offset by 63, header giving `n`
//! followed by the upper triangle in column-major order (`(0,1), (0,2),
//! (1,2), (0,3), ..`), big-endian within each byte, zero padded.

use super::{Graph, MAX_VERTICES};
use crate::error::ParseError;

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn sextet(offset: usize, byte: u8) -> Result<u64, ParseError> {
    if (63..=126).contains(&byte) {
        Ok(u64::from(byte - OFFSET))
    } else {
        Err(ParseError::BadChar { offset, byte })
    }
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted. Rejects graphs with more than `cap` vertices.
pub fn parse_graph6(line: &str, cap: usize) -> Result<Graph, ParseError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }

    let (n, body_start) = if bytes[0] != 126 {
        (sextet(0, bytes[0])? as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(ParseError::BadHeader);
        }
        let mut n = 0u64;
        for (i, &b) in bytes[2..8].iter().enumerate() {
            n = n << 6 | sextet(i + 2, b)?;
        }
        (n as usize, 8)
    } else {
        if bytes.len() < 4 {
            return Err(ParseError::BadHeader);
        }
        let mut n = 0u64;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = n << 6 | sextet(i + 1, b)?;
        }
        (n as usize, 4)
    };
    if n > cap.min(MAX_VERTICES) {
        return Err(ParseError::CapExceeded { n, cap: cap.min(MAX_VERTICES) });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[body_start..];
    let mut sextets = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        sextets.push(sextet(body_start + i, b)?);
    }
    if body.len() < expected {
        return Err(ParseError::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(ParseError::TrailingGarbage);
    }

    let mut adj = vec![0u64; n];
    let mut k = 0usize;
    for col in 1..n {
        for row in 0..col {
            if sextets[k / 6] >> (5 - k % 6) & 1 == 1 {
                adj[row] |= 1u64 << col;
                adj[col] |= 1u64 << row;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = acc << 1 | u8::from(g.has_edge(row, col));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}
