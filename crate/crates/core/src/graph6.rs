//! graph6 text encoding for graphs on at most 62 vertices.
//!
//! One header byte `n + 63`, then the upper adjacency triangle in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte (most significant
//! first), each byte offset by 63, with zero padding in the last byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MAX_GRAPH6_VERTICES: usize = 62;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let bytes = line.as_bytes();
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                offset,
                message: format!("byte {b:#04x} is outside the printable range 63..=126"),
            });
        }
    }
    let Some(&header) = bytes.first() else {
        return Err(Error::Parse {
            offset: 0,
            message: "empty input".into(),
        });
    };
    if header == 126 {
        return Err(Error::Parse {
            offset: 0,
            message: "extended size headers (n > 62) are not supported".into(),
        });
    }
    let n = (header - 63) as usize;
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        return Err(Error::Parse {
            offset: bytes.len().min(expected),
            message: format!(
                "expected {expected} bytes for n = {n}, found {}",
                bytes.len()
            ),
        });
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let last = bytes.len() - 1;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (bytes[last] - 63) & pad_mask != 0 {
            return Err(Error::Parse {
                offset: last,
                message: "nonzero padding bits".into(),
            });
        }
    }
    Graph::from_adjacency(adj)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Error::UnsupportedSize {
            what: "graph6 encoding",
            n,
            max: MAX_GRAPH6_VERTICES,
        });
    }
    let mut body = vec![0u8; body_len(n)];
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            if g.has_edge(u, v) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(1 + body.len());
    out.push((n as u8 + 63) as char);
    out.extend(body.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}
