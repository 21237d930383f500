//! Named graph generators used as the test corpus.
//!
//! Bipartite families emit vertices in part-contiguous order (part 1 first).

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("bad parameters for {0}: {1}")]
    BadParams(&'static str, String),
}

/// Path P_n on vertices 0..n in line order.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle C_n in circular order.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// K_{a,b} with part 1 = 0..a, part 2 = a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    Graph::from_edges(a + b, &edges).unwrap()
}

/// Hypercube Q_k; vertices are bit patterns ordered even bit-count first,
/// so the bipartition by parity is contiguous.
pub fn hypercube(k: usize) -> Graph {
    assert!(k >= 1 && k <= 8);
    let total = 1usize << k;
    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by_key(|&b| (b.count_ones() % 2, b));
    let mut index = vec![0usize; total];
    for (i, &b) in order.iter().enumerate() {
        index[b] = i;
    }
    let mut edges = Vec::new();
    for b in 0..total {
        for bit in 0..k {
            let c = b ^ (1 << bit);
            if b < c {
                edges.push((index[b], index[c]));
            }
        }
    }
    Graph::from_edges(total, &edges).unwrap()
}

/// Heawood graph: incidence graph of the Fano plane. Points 0..7, lines 7..14.
pub fn heawood() -> Graph {
    const LINES: [[usize; 3]; 7] = [
        [0, 1, 2],
        [0, 3, 4],
        [0, 5, 6],
        [1, 3, 5],
        [1, 4, 6],
        [2, 3, 6],
        [2, 4, 5],
    ];
    let mut edges = Vec::new();
    for (i, line) in LINES.iter().enumerate() {
        for &p in line {
            edges.push((p, 7 + i));
        }
    }
    Graph::from_edges(14, &edges).unwrap()
}

/// Petersen graph: outer 5-cycle 0..5, inner pentagram 5..10, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).unwrap()
}

/// Crown graph on 2k vertices: K_{k,k} minus a perfect matching.
pub fn crown(k: usize) -> Graph {
    assert!(k >= 2);
    let mut edges = Vec::new();
    for u in 0..k {
        for v in 0..k {
            if u != v {
                edges.push((u, k + v));
            }
        }
    }
    Graph::from_edges(2 * k, &edges).unwrap()
}

pub const NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "hypercube",
    "heawood",
    "petersen",
    "crown",
];

/// Looks up a catalog graph by name and integer parameters.
pub fn by_name(name: &str, params: &[usize]) -> Result<Graph, CatalogError> {
    let arity = |k: usize| -> Result<(), CatalogError> {
        if params.len() == k {
            Ok(())
        } else {
            Err(CatalogError::BadParams(
                "arity",
                format!("{name} expects {k} parameter(s), got {}", params.len()),
            ))
        }
    };
    let check = |name: &'static str, cond: bool| -> Result<(), CatalogError> {
        if cond {
            Ok(())
        } else {
            Err(CatalogError::BadParams(name, format!("{params:?}")))
        }
    };
    match name {
        "path" => {
            arity(1)?;
            check("path", params[0] >= 1 && params[0] <= 512)?;
            Ok(path(params[0]))
        }
        "cycle" => {
            arity(1)?;
            check("cycle", params[0] >= 3 && params[0] <= 512)?;
            Ok(cycle(params[0]))
        }
        "complete" => {
            arity(1)?;
            check("complete", params[0] >= 1 && params[0] <= 512)?;
            Ok(complete(params[0]))
        }
        "complete_bipartite" => {
            arity(2)?;
            check(
                "complete_bipartite",
                params[0] >= 1 && params[1] >= 1 && params[0] + params[1] <= 512,
            )?;
            Ok(complete_bipartite(params[0], params[1]))
        }
        "hypercube" => {
            arity(1)?;
            check("hypercube", params[0] >= 1 && params[0] <= 8)?;
            Ok(hypercube(params[0]))
        }
        "heawood" => {
            arity(0)?;
            Ok(heawood())
        }
        "petersen" => {
            arity(0)?;
            Ok(petersen())
        }
        "crown" => {
            arity(1)?;
            check("crown", params[0] >= 2 && params[0] <= 256)?;
            Ok(crown(params[0]))
        }
        _ => Err(CatalogError::UnknownName(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, distance_matrices};

    #[test]
    fn cycle_c6() {
        let g = cycle(6);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn hypercube_q3() {
        let g = hypercube(3);
        assert_eq!(g.n(), 8);
        assert_eq!(g.edge_count(), 12);
        let b = bipartition(&g).unwrap();
        assert_eq!((b.n1(), b.n2()), (4, 4));
        // part-contiguous: part 1 is exactly vertices 0..4
        assert_eq!(b.part1, vec![0, 1, 2, 3]);
    }

    #[test]
    fn heawood_girth_6() {
        let g = heawood();
        assert_eq!(g.n(), 14);
        assert_eq!(g.edge_count(), 21);
        assert!((0..14).all(|u| g.degree(u) == 3));
        let dm = distance_matrices(&g).unwrap();
        // girth 6: no two vertices joined by two distinct paths of length <= 2,
        // i.e. A^2 has no entry > 1 off the diagonal and no triangles.
        let a2 = g.adjacency_int().pow(2);
        for u in 0..14 {
            for v in 0..14 {
                if u != v {
                    assert!(a2[(u, v)] <= 1, "4-cycle through {u},{v}");
                }
            }
        }
        // but there is a 6-cycle: some distance-3 pair with >= 2 shortest paths
        assert_eq!(dm.diameter(), 3);
    }

    #[test]
    fn crown_3_is_c6() {
        let g = crown(3);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!((0..6).all(|u| g.degree(u) == 2));
        assert!(g.is_connected());
    }

    #[test]
    fn by_name_errors() {
        assert!(matches!(
            by_name("moebius", &[]),
            Err(CatalogError::UnknownName(_))
        ));
        assert!(matches!(
            by_name("cycle", &[2]),
            Err(CatalogError::BadParams(..))
        ));
        assert!(matches!(
            by_name("cycle", &[]),
            Err(CatalogError::BadParams(..))
        ));
    }
}
