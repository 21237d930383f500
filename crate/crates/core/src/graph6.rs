//! graph6 interchange format: parser and encoder.
//!
//! Standard byte layout: one size byte (n + 63) for n <= 62, then the upper
//! triangle read column by column, 6 bits per printable character. The
//! optional `>>graph6<<` header is accepted and skipped.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6: {0}")]
    Malformed(String),
    #[error("unsupported graph6 size encoding (only n <= 62 supported)")]
    UnsupportedSize,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Malformed("empty input".into()));
    }
    if bytes[0] == b'~' {
        // long-form size encodings are out of scope
        return Err(Graph6Error::UnsupportedSize);
    }
    if !(63..=126).contains(&bytes[0]) {
        return Err(Graph6Error::Malformed(format!(
            "bad size byte 0x{:02x}",
            bytes[0]
        )));
    }
    let n = (bytes[0] - 63) as usize;
    let nbits = n * (n - 1) / 2;
    let nchars = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() != nchars {
        return Err(Graph6Error::Malformed(format!(
            "expected {} body characters for n = {}, got {}",
            nchars,
            n,
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(nchars * 6);
    for &c in body {
        if !(63..=126).contains(&c) {
            return Err(Graph6Error::Malformed(format!("bad character 0x{c:02x}")));
        }
        let v = c - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::UnsupportedSize);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for &b in chunk {
            v = (v << 1) | b as u8;
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn parse_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn parse_empty_pair() {
        let g = parse_graph6("A?").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_cr_is_a_4_cycle() {
        // "Cr" encodes a 4-cycle under a non-identity labeling:
        // bits 110011 give edges 01, 02, 13, 23.
        let g = parse_graph6("Cr").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
        assert!((0..4).all(|u| g.degree(u) == 2));
        assert!(g.is_connected());
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn canonical_c4_is_cl() {
        assert_eq!(encode_graph6(&catalog::cycle(4)).unwrap(), "Cl");
    }

    #[test]
    fn header_skipped() {
        let g = parse_graph6(">>graph6<<A_").unwrap();
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Graph6Error::Malformed(_))));
        assert!(matches!(parse_graph6("C"), Err(Graph6Error::Malformed(_))));
        assert!(matches!(
            parse_graph6("A\u{1}"),
            Err(Graph6Error::Malformed(_))
        ));
        assert_eq!(parse_graph6("~??"), Err(Graph6Error::UnsupportedSize));
    }

    #[test]
    fn round_trip_catalog() {
        for g in [
            catalog::path(4),
            catalog::cycle(6),
            catalog::complete(5),
            catalog::complete_bipartite(2, 3),
            catalog::hypercube(3),
            catalog::heawood(),
            catalog::petersen(),
            catalog::crown(4),
        ] {
            let enc = encode_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&enc).unwrap(), g);
        }
    }
}
