//! The graph6 text format for small simple graphs.
//!
//! Encoding: a size header (`n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups), then the upper triangle of the adjacency matrix in
//! column-major order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte, most significant first, each byte offset by 63. Trailing pad
//! bits are zero.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
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

/// Decode a single graph6 line. Trailing `\n`/`\r\n` and a leading
/// `>>graph6<<` header are accepted.
pub fn decode(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = text.strip_prefix(HEADER) {
        bytes = rest.as_bytes();
        base = HEADER.len();
    }
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Error::graph6(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::graph6(
                base + i,
                format!("byte {b:#04x} outside 63..=126"),
            ));
        }
    }
    let (n, header_len) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Error::graph6(base + bytes.len(), "truncated size header"));
        }
        if bytes[1] == 126 {
            return Err(Error::graph6(
                base + 1,
                "8-byte size header: order exceeds 64",
            ));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > Graph::MAX_ORDER {
        return Err(Error::graph6(base, format!("order {n} exceeds 64")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() != expected {
        return Err(Error::graph6(
            base + header_len + body.len().min(expected),
            format!("expected {expected} data bytes, found {}", body.len()),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::graph6(
                base + header_len + expected - 1,
                "nonzero padding bits",
            ));
        }
    }
    Ok(g)
}

/// Read a graph6 corpus, one graph per line. Blank lines are skipped.
/// Errors carry the 1-based line number.
pub fn read_all<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(decode(line.trim_end()).map_err(|e| at_line(i + 1, e))?);
    }
    Ok(out)
}

pub(crate) fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Graph6 {
            offset, message, ..
        } => Error::Graph6 {
            line: Some(line),
            offset,
            message,
        },
        other => other,
    }
}
