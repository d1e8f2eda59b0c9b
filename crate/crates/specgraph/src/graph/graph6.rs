//! graph6 encoding and decoding (dense undirected format).
//!
//! The byte layout follows the format published with the nauty tools: a
//! size field N(n), then the upper triangle of the adjacency matrix read
//! column by column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), packed
//! big-endian into 6-bit groups, each group offset by 63 into the printable
//! ASCII range 63..=126. The optional `>>graph6<<` header is accepted and
//! never written. sparse6 and digraph6 are out of scope.

use super::Graph;
use thiserror::Error;

/// Dense adjacency storage puts a practical cap on the vertex count, far
/// below the 2^36 - 1 the size field could express.
pub const MAX_GRAPH6_VERTICES: usize = 4096;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte 0x{byte:02x} at position {pos} is outside the printable range 63..=126")]
    NonPrintable { pos: usize, byte: u8 },
    #[error("malformed length header: {0}")]
    MalformedHeader(String),
    #[error("truncated bit body: expected {expected} bytes after the size field, got {got}")]
    TruncatedBody { expected: usize, got: usize },
    #[error("{extra} trailing bytes after the bit body")]
    TrailingData { extra: usize },
    #[error("vertex count {n} exceeds the supported maximum {MAX_GRAPH6_VERTICES}")]
    TooLarge { n: u64 },
}

const HEADER: &[u8] = b">>graph6<<";

/// Number of bytes encoding the upper-triangle bits for `n` vertices.
fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 value (optionally preceded by the standard header;
/// trailing CR/LF is tolerated).
pub fn parse_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = input;
    if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
    }
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::NonPrintable {
            pos,
            byte: bytes[pos],
        });
    }

    let (n, rest) = parse_size(bytes)?;
    if n > MAX_GRAPH6_VERTICES as u64 {
        return Err(Graph6Error::TooLarge { n });
    }
    let n = n as usize;
    let expected = if n >= 2 { body_len(n) } else { 0 };
    if rest.len() < expected {
        return Err(Graph6Error::TruncatedBody {
            expected,
            got: rest.len(),
        });
    }
    if rest.len() > expected {
        return Err(Graph6Error::TrailingData {
            extra: rest.len() - expected,
        });
    }

    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                g.adj[i * n + j] = true;
                g.adj[j * n + i] = true;
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Decodes the N(n) size field, returning the vertex count and the body.
fn parse_size(bytes: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    let sixbits = |b: u8| u64::from(b - 63);
    match bytes {
        [] => Err(Graph6Error::Empty),
        [b, rest @ ..] if *b != 126 => Ok((sixbits(*b), rest)),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Graph6Error::MalformedHeader(
                    "8-byte size field cut short".into(),
                ));
            }
            let n = rest[..6]
                .iter()
                .fold(0u64, |acc, &b| (acc << 6) | sixbits(b));
            if n < 258_048 {
                return Err(Graph6Error::MalformedHeader(format!(
                    "non-canonical 8-byte size field for n = {n}"
                )));
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Graph6Error::MalformedHeader(
                    "4-byte size field cut short".into(),
                ));
            }
            let n = rest[..3]
                .iter()
                .fold(0u64, |acc, &b| (acc << 6) | sixbits(b));
            if !(63..258_048).contains(&n) {
                return Err(Graph6Error::MalformedHeader(format!(
                    "non-canonical 4-byte size field for n = {n}"
                )));
            }
            Ok((n, &rest[3..]))
        }
        _ => unreachable!("first byte is either 126 or not"),
    }
}

/// Encodes a graph in canonical graph6 bytes (shortest size field, zero
/// padding, no header, no newline).
pub fn write_graph6(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend_from_slice(&[126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.is_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    out
}

/// Parses a whole graph6 file: one graph per line, `>>graph6<<` header
/// lines and blank lines skipped. Returns `(line_number, result)` pairs so
/// callers can report failures without aborting.
pub fn parse_graph6_file(content: &[u8]) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    content
        .split(|&b| b == b'\n')
        .enumerate()
        .filter_map(|(idx, line)| {
            let line = line.strip_suffix(b"\r").unwrap_or(line);
            let body = line.strip_prefix(HEADER).unwrap_or(line);
            if body.is_empty() {
                None
            } else {
                Some((idx + 1, parse_graph6(line)))
            }
        })
        .collect()
}
