//! graph6 encoding: printable ASCII for the upper adjacency triangle.
//!
//! For `n <= 62` the first byte is `n + 63`; the triangle bits
//! x(0,1), x(0,2), x(1,2), x(0,3), ... (column-major) follow, padded with
//! zeros to a multiple of 6, each 6-bit group offset by 63.

use super::{Graph, GraphError};

/// graph6 here uses the single-byte order header only.
pub const GRAPH6_MAX_N: usize = 62;

/// Encodes a graph as a graph6 string.
pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(GraphError::OrderCeiling {
            operation: "write_graph6",
            ceiling: GRAPH6_MAX_N,
            n,
        });
    }
    let mut bytes = vec![n as u8 + 63];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(bytes).expect("printable ascii"))
}

/// Decodes a graph6 string produced by [`write_graph6`] (or any conforming
/// encoder with a single-byte order header).
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::InvalidGraph6("empty input".into()));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(GraphError::InvalidGraph6(format!(
                "byte {b} outside the printable range 63..126"
            )));
        }
    }
    let n = (bytes[0] - 63) as usize;
    if n > GRAPH6_MAX_N {
        return Err(GraphError::InvalidGraph6(format!(
            "order {n} exceeds the single-byte header limit {GRAPH6_MAX_N}"
        )));
    }
    let triangle_bits = n * n.saturating_sub(1) / 2;
    let expected_len = 1 + triangle_bits.div_ceil(6);
    if bytes.len() != expected_len {
        return Err(GraphError::InvalidGraph6(format!(
            "expected {expected_len} bytes for order {n}, got {}",
            bytes.len()
        )));
    }
    let mut g = Graph::edgeless(n)?;
    let mut bit_index = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}
