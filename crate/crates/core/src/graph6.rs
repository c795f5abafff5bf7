//! graph6 encoding, as produced by nauty's `geng` and friends.
//!
//! Layout: a size field `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), …`,
//! packed six bits per byte, each byte offset by 63, the final byte
//! zero-padded on the right.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const BIAS: u8 = 63;
const LONG_SIZE: u8 = 126;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(LONG_SIZE);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    // Every byte is in 63..=126.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn from_graph6(bytes: &[u8]) -> Result<Graph> {
    let sextet = |offset: usize| -> Result<u8> {
        match bytes.get(offset) {
            Some(&b) if (BIAS..=126).contains(&b) => Ok(b - BIAS),
            Some(&b) => Err(Error::Parse {
                offset,
                reason: format!("byte {b:#04x} outside the printable range 63..=126"),
            }),
            None => Err(Error::Parse {
                offset,
                reason: "unexpected end of input".into(),
            }),
        }
    };

    let (n, body) = match bytes.first() {
        None => {
            return Err(Error::Parse {
                offset: 0,
                reason: "empty input".into(),
            })
        }
        Some(&LONG_SIZE) => {
            if bytes.get(1) == Some(&LONG_SIZE) {
                let mut n = 0usize;
                for k in 2..8 {
                    n = n << 6 | sextet(k)? as usize;
                }
                (n, 8)
            } else {
                let mut n = 0usize;
                for k in 1..4 {
                    n = n << 6 | sextet(k)? as usize;
                }
                (n, 4)
            }
        }
        Some(_) => (sextet(0)? as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::Capacity {
            what: "graph6 vertex count",
            requested: n,
            limit: MAX_VERTICES,
        });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = body + bits.div_ceil(6);
    if bytes.len() > expected {
        return Err(Error::Parse {
            offset: expected,
            reason: format!("trailing data after {expected} bytes"),
        });
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body + bits / 6;
        let pad = 6 - bits % 6;
        if sextet(last)? & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse {
                offset: last,
                reason: "non-zero padding bits".into(),
            });
        }
    }
    Ok(g)
}

/// Reads one graph per line, skipping blank lines and an optional
/// `>>graph6<<` header on the first line. Parse errors carry the 1-based
/// line number in their reason.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let mut text = line.trim_end_matches(['\r', '\n', ' ', '\t']);
        if idx == 0 {
            text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        }
        if text.is_empty() {
            continue;
        }
        let g = from_graph6(text.as_bytes()).map_err(|e| match e {
            Error::Parse { offset, reason } => Error::Parse {
                offset,
                reason: format!("line {}: {reason}", idx + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}
