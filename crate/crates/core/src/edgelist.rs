//! Human-writable edge-list format.
//!
//! Lines are `u v` with 0-based vertex ids; an optional first line
//! `n <count>` fixes the vertex count (needed for isolated vertices).
//! Duplicate edges are tolerated and deduplicated. `#` starts a comment.

use crate::graph::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut declared_n: Option<usize> = None;
    let mut max_vertex = 0usize;
    let mut any_vertex = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().unwrap();
        if lineno == 0 && first == "n" {
            let count = tokens
                .next()
                .ok_or_else(|| GraphError::BadToken("missing count after 'n'".into()))?;
            declared_n = Some(
                count
                    .parse()
                    .map_err(|_| GraphError::BadToken(count.into()))?,
            );
            continue;
        }
        let u: usize = first.parse().map_err(|_| GraphError::BadToken(first.into()))?;
        let vtok = tokens
            .next()
            .ok_or_else(|| GraphError::BadToken(line.into()))?;
        let v: usize = vtok.parse().map_err(|_| GraphError::BadToken(vtok.into()))?;
        if let Some(extra) = tokens.next() {
            return Err(GraphError::BadToken(extra.into()));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        max_vertex = max_vertex.max(u).max(v);
        any_vertex = true;
        edges.push((u, v));
    }
    let n = match declared_n {
        Some(n) => n,
        None if any_vertex => max_vertex + 1,
        None => 0,
    };
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_p3() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn header_and_c4() {
        let g = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn self_loop() {
        assert_eq!(parse_edge_list("0 0"), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn duplicate_edge_deduplicated() {
        let g = parse_edge_list("0 1\n1 0\n0 1").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn bad_token() {
        assert!(matches!(
            parse_edge_list("0 x"),
            Err(GraphError::BadToken(_))
        ));
    }

    #[test]
    fn isolated_vertices_via_header() {
        let g = parse_edge_list("n 5\n0 1").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(4), 0);
    }
}
