//! graph6 text encoding (one undirected simple graph per line).
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte and offset by 63.

use alloc::string::String;
use alloc::vec;
use core::fmt;

use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Optional header line prefix written by some generators.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    /// Byte outside the printable range 63..=126.
    ByteOutOfRange(u8),
    TruncatedHeader,
    Truncated { expected_len: usize },
    TrailingBytes,
    NonZeroPadding,
    TooManyVertices(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Error {
    /// Byte offset into the line, after any `>>graph6<<` prefix.
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl fmt::Display for Graph6Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph6 error at byte {}: ", self.offset)?;
        match &self.kind {
            Graph6ErrorKind::Empty => f.write_str("empty input"),
            Graph6ErrorKind::ByteOutOfRange(b) => {
                write!(f, "byte 0x{b:02x} is outside the range 63..=126")
            }
            Graph6ErrorKind::TruncatedHeader => f.write_str("truncated size header"),
            Graph6ErrorKind::Truncated { expected_len } => {
                write!(f, "line ends early, expected {expected_len} bytes")
            }
            Graph6ErrorKind::TrailingBytes => f.write_str("trailing bytes after the adjacency data"),
            Graph6ErrorKind::NonZeroPadding => f.write_str("padding bits are not zero"),
            Graph6ErrorKind::TooManyVertices(n) => {
                write!(f, "{n} vertices exceeds the supported maximum of {MAX_VERTICES}")
            }
        }
    }
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

fn sextet(bytes: &[u8], i: usize) -> Result<u32, Graph6Error> {
    let b = bytes[i];
    if !(63..=126).contains(&b) {
        return Err(err(i, Graph6ErrorKind::ByteOutOfRange(b)));
    }
    Ok(u32::from(b - 63))
}

/// Decodes one graph6 line. Trailing `\r`/`\n` and a `>>graph6<<` prefix are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, Graph6ErrorKind::Empty));
    }

    let first = sextet(bytes, 0)?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        // 126 followed by three sextets, or 126 126 followed by six.
        let wide = bytes.len() > 1 && bytes[1] == 126;
        let (start, count) = if wide { (2, 6) } else { (1, 3) };
        if bytes.len() < start + count {
            return Err(err(bytes.len(), Graph6ErrorKind::TruncatedHeader));
        }
        let mut n: u64 = 0;
        for i in start..start + count {
            n = (n << 6) | u64::from(sextet(bytes, i)?);
        }
        (n as usize, start + count)
    };
    if n > MAX_VERTICES {
        return Err(err(0, Graph6ErrorKind::TooManyVertices(n)));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    let expected_len = pos + data_len;
    if bytes.len() < expected_len {
        return Err(err(bytes.len(), Graph6ErrorKind::Truncated { expected_len }));
    }
    if bytes.len() > expected_len {
        return Err(err(expected_len, Graph6ErrorKind::TrailingBytes));
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    let mut word = 0u32;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                word = sextet(bytes, pos)?;
                pos += 1;
            }
            if (word >> (5 - k % 6)) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad = 6 - k % 6;
        if word & ((1 << pad) - 1) != 0 {
            return Err(err(pos - 1, Graph6ErrorKind::NonZeroPadding));
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes a graph as a graph6 line without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push(char::from(63 + n as u8));
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(char::from(63 + ((n >> shift) & 63) as u8));
        }
    }
    let mut word = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            word <<= 1;
            if g.has_edge(i, j) {
                word |= 1;
            }
            k += 1;
            if k.is_multiple_of(6) {
                out.push(char::from(63 + word));
                word = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        word <<= 6 - k % 6;
        out.push(char::from(63 + word));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hand_decoded_examples() {
        // 'C' = 67 -> n = 4; '~' = 126 -> 63 = 0b111111, all six pairs.
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, Graph::complete(4).unwrap());
        // 'A' -> n = 2; '_' = 95 -> 32 = 0b100000, x(0,1) = 1.
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn header_and_line_endings() {
        assert_eq!(parse_graph6(">>graph6<<C~\r\n").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn errors_name_offsets() {
        assert_eq!(parse_graph6("").unwrap_err().kind, Graph6ErrorKind::Empty);
        assert_eq!(
            parse_graph6("C~~").unwrap_err(),
            Graph6Error { offset: 2, kind: Graph6ErrorKind::TrailingBytes }
        );
        assert_eq!(
            parse_graph6("C").unwrap_err().kind,
            Graph6ErrorKind::Truncated { expected_len: 2 }
        );
        assert_eq!(
            parse_graph6("C ").unwrap_err(),
            Graph6Error { offset: 1, kind: Graph6ErrorKind::ByteOutOfRange(b' ') }
        );
        assert_eq!(
            parse_graph6(":Fa@x^").unwrap_err().kind,
            Graph6ErrorKind::ByteOutOfRange(b':')
        );
        // n = 3 uses 3 of 6 bits; 'B' + 0b000001 sets a padding bit.
        assert_eq!(
            parse_graph6("B@").unwrap_err().kind,
            Graph6ErrorKind::NonZeroPadding
        );
        assert_eq!(parse_graph6("~").unwrap_err().kind, Graph6ErrorKind::TruncatedHeader);
        // 126 + "?@@" = 0b000000_000001_000001 = 65 vertices.
        assert_eq!(
            parse_graph6("~?@@").unwrap_err().kind,
            Graph6ErrorKind::TooManyVertices(65)
        );
    }

    #[test]
    fn long_header_form() {
        // 64 vertices, empty graph: 126 then 0, 1, 0 -> n = 64.
        let n = 64usize;
        let mut line = String::from("~?@?");
        let data = (n * (n - 1) / 2).div_ceil(6);
        for _ in 0..data {
            line.push('?');
        }
        let g = parse_graph6(&line).unwrap();
        assert_eq!(encode_graph6(&g), line);
        assert_eq!(g.order(), 64);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn encode_known_strings() {
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        // P4 0-1-2-3: bits x01 x02 x12 x03 x13 x23 = 1 0 1 0 0 1 = 41 -> 'h'.
        assert_eq!(encode_graph6(&Graph::path(4).unwrap()), "Ch");
    }
}
