//! Bit-exact graph6 codec.
//!
//! A graph6 record is printable ASCII built from 6-bit groups, each
//! stored as `value + 63` (so every byte lies in `63..=126`):
//!
//! * header: `63 + n` for `n <= 62`; for `63 <= n <= 258047` the byte
//!   `126` followed by three bytes carrying n in big-endian 6-bit groups;
//! * payload: the upper-triangle adjacency bits read column-wise, i.e.
//!   in the pair order `(0,1), (0,2), (1,2), (0,3), ...`, packed six per
//!   byte starting from the most significant bit and zero-padded to a
//!   6-bit boundary.
//!
//! Encoding always emits the canonical form (short header whenever
//! `n <= 62`); decoding accepts either header for any order in range and
//! rejects nonzero padding, wrong payload length, and out-of-range bytes.

use thiserror::Error;

use crate::graph::Graph;

/// Largest order representable without the 8-byte header extension.
pub const MAX_ORDER: usize = 258_047;

/// Errors from graph6 decoding and encoding.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("payload too short: expected {expected} payload bytes, found {found}")]
    TruncatedPayload { expected: usize, found: usize },
    #[error("payload too long: expected {expected} payload bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("padding bits past the last vertex pair must be zero")]
    NonzeroPadding,
    #[error("order {0} exceeds the supported graph6 limit {MAX_ORDER}")]
    OrderTooLarge(usize),
}

/// Pairs `(i, j)` with `i < j < n` in graph6 bit order: column-wise by
/// `j`, then by `i`.
fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

fn pair_bits(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn payload_len(n: usize) -> usize {
    pair_bits(n).div_ceil(6)
}

/// Decodes a single graph6 record.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }

    // Header: one byte for n <= 62, 126 + three bytes otherwise.
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form encodes n >= 258048, beyond the supported range.
            return Err(Graph6Error::OrderTooLarge(MAX_ORDER + 1));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::TruncatedPayload {
                expected: 3,
                found: bytes.len() - 1,
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };

    let expected = payload_len(n);
    let found = bytes.len() - header_len;
    if found < expected {
        return Err(Graph6Error::TruncatedPayload { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingData { expected, found });
    }

    let payload = &bytes[header_len..];
    let bits = pair_bits(n);
    let mut adj = vec![false; n * n];
    for (k, (i, j)) in pair_order(n).enumerate() {
        let value = payload[k / 6] - 63;
        if value & (1 << (5 - k % 6)) != 0 {
            adj[i * n + j] = true;
            adj[j * n + i] = true;
        }
    }
    // Trailing bits in the last payload byte must be zero.
    if !bits.is_multiple_of(6) {
        let last = payload[expected - 1] - 63;
        let used = bits % 6;
        if last & ((1 << (6 - used)) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }

    Ok(Graph::from_adjacency(n, adj))
}

/// Encodes a graph as its canonical graph6 record.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }

    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in pair_order(n) {
        acc = (acc << 1) | u8::from(g.adjacent(i, j));
        filled += 1;
        if filled == 6 {
            out.push(63 + acc);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }

    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
