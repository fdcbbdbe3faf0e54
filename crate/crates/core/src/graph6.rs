//! Text encodings for graphs: graph6 and a plain edge-list format.
//!
//! graph6 (short form, up to 62 vertices): the first byte is `n + 63`, then
//! the upper triangle of the adjacency matrix in column order — the bit for
//! pair `(i, j)`, `i < j`, comes before `(i', j')` iff `j < j'` or
//! `j == j' && i < i'` — packed six bits per byte, most significant bit
//! first, each 6-bit group offset by 63 into the printable range. Trailing
//! pad bits are zero on output and ignored on input.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`.
//! Blank lines and lines starting with `#` are skipped in both formats.

use thiserror::Error;

use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphError};

/// Largest vertex count expressible in short-form graph6.
pub const GRAPH6_MAX_VERTICES: usize = 62;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 alphabet")]
    NonPrintable { byte: u8, pos: usize },
    #[error("long-form graph6 (more than 62 vertices) is not supported")]
    LongForm,
    #[error("graph6 string encodes zero vertices")]
    ZeroVertices,
    #[error("graph6 string truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after graph6 string: expected {expected} bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("{0} vertices do not fit short-form graph6 (max {GRAPH6_MAX_VERTICES})")]
    TooLarge(usize),
}

/// Decode one short-form graph6 string. A leading `>>graph6<<` header is
/// tolerated.
pub fn parse_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::NonPrintable { byte, pos });
        }
    }
    if bytes[0] == 126 {
        return Err(Graph6Error::LongForm);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    let nbits = n * (n - 1) / 2;
    let expected = 1 + nbits.div_ceil(6);
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: bytes.len(),
        });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData {
            expected,
            found: bytes.len(),
        });
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = bytes[1 + k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj, None).expect("decoded adjacency is symmetric and loop-free"))
}

/// Encode a graph as a short-form graph6 string.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decode every graph6 line in `text`, skipping blank lines and `#` comments.
pub fn parse_graph6_lines(text: &str) -> impl Iterator<Item = Result<Graph, Graph6Error>> + '_ {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("missing `n m` header line")]
    MissingHeader,
    #[error("cannot parse `{0}` as an integer")]
    BadInteger(String),
    #[error("line `{0}` is not an edge `u v`")]
    BadEdgeLine(String),
    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parse the edge-list format: `n m` header, then `m` lines `u v`.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let mut nums = header.split_whitespace();
    let n = parse_int(nums.next().ok_or(EdgeListError::MissingHeader)?)?;
    let m = parse_int(nums.next().ok_or(EdgeListError::MissingHeader)?)?;
    if nums.next().is_some() {
        return Err(EdgeListError::MissingHeader);
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (parse_int(u)?, parse_int(v)?),
            _ => return Err(EdgeListError::BadEdgeLine(line.to_string())),
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::WrongEdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

fn parse_int(s: &str) -> Result<usize, EdgeListError> {
    s.parse().map_err(|_| EdgeListError::BadInteger(s.to_string()))
}

/// Serialize in the edge-list format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn known_encodings() {
        // 'B' = 2 + 63 would be K2-sized; "Bw" is the triangle: n = 3 and
        // the single data byte 'w' - 63 = 56 = 0b111000 sets all three pairs.
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3, Family::Complete(3).build().unwrap());
        assert_eq!(to_graph6(&k3).unwrap(), "Bw");

        // Single vertex.
        let k1 = Family::Complete(1).build().unwrap();
        assert_eq!(to_graph6(&k1).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap(), k1);

        // Five vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn header_and_whitespace_tolerated() {
        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), k3);
        assert_eq!(parse_graph6("  Bw\n").unwrap(), k3);
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("?"), Err(Graph6Error::ZeroVertices));
        assert!(matches!(
            parse_graph6("B\x1f"),
            Err(Graph6Error::NonPrintable { .. })
        ));
        assert_eq!(
            parse_graph6("B"),
            Err(Graph6Error::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6("Bww"),
            Err(Graph6Error::TrailingData {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::LongForm));
    }

    #[test]
    fn encode_rejects_oversized() {
        let g = Graph::edgeless(63).unwrap();
        assert_eq!(to_graph6(&g), Err(Graph6Error::TooLarge(63)));
    }

    #[test]
    fn line_iterator_skips_comments() {
        let text = "# a comment\n\nBw\n@\n";
        let graphs: Result<Vec<_>, _> = parse_graph6_lines(text).collect();
        let graphs = graphs.unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].n(), 3);
        assert_eq!(graphs[1].n(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(parse_edge_list(""), Err(EdgeListError::MissingHeader));
        assert_eq!(
            parse_edge_list("4\n"),
            Err(EdgeListError::MissingHeader)
        );
        assert_eq!(
            parse_edge_list("4 2\n0 1\n"),
            Err(EdgeListError::WrongEdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            parse_edge_list("4 1\n0 x\n"),
            Err(EdgeListError::BadInteger(_))
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 5\n"),
            Err(EdgeListError::Graph(_))
        ));
    }
}
