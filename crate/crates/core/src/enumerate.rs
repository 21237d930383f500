//! Exhaustive labeled enumeration of bipartite graphs on fixed parts.
//!
//! Every biadjacency mask is emitted once; there is no isomorphism
//! reduction, so isomorphic duplicates appear (all downstream properties
//! are isomorphism-invariant, duplicates only cost time).

use crate::graph::Graph;
use thiserror::Error;

/// Hard cap on n1 * n2 (the enumeration is 2^(n1*n2) masks).
pub const MAX_CELLS: usize = 20;
/// Default cap used unless a caller explicitly allows large runs.
pub const DEFAULT_MAX_CELLS: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("part shape ({0}, {1}) exceeds the enumeration cap of {2} biadjacency cells")]
    TooLarge(usize, usize, usize),
}

/// Streams all labeled bipartite graphs on parts of sizes n1 and n2,
/// part-contiguous (vertices 0..n1 then n1..n1+n2).
pub struct BipartiteEnumerator {
    n1: usize,
    n2: usize,
    mask: u64,
    end: u64,
    connected_only: bool,
}

impl BipartiteEnumerator {
    pub fn new(n1: usize, n2: usize, connected_only: bool) -> Result<Self, EnumerateError> {
        Self::with_cap(n1, n2, connected_only, DEFAULT_MAX_CELLS)
    }

    pub fn with_cap(
        n1: usize,
        n2: usize,
        connected_only: bool,
        cap: usize,
    ) -> Result<Self, EnumerateError> {
        let cap = cap.min(MAX_CELLS);
        if n1 == 0 || n2 == 0 || n1 * n2 > cap {
            return Err(EnumerateError::TooLarge(n1, n2, cap));
        }
        Ok(BipartiteEnumerator {
            n1,
            n2,
            mask: 0,
            end: 1u64 << (n1 * n2),
            connected_only,
        })
    }

    /// Builds the graph for one biadjacency mask: bit i*n2 + j is the edge
    /// between vertex i of part 1 and vertex n1 + j of part 2.
    pub fn graph_for_mask(n1: usize, n2: usize, mask: u64) -> Graph {
        let mut edges = Vec::new();
        for i in 0..n1 {
            for j in 0..n2 {
                if mask >> (i * n2 + j) & 1 == 1 {
                    edges.push((i, n1 + j));
                }
            }
        }
        Graph::from_edges(n1 + n2, &edges).unwrap()
    }
}

impl Iterator for BipartiteEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.mask < self.end {
            let g = Self::graph_for_mask(self.n1, self.n2, self.mask);
            self.mask += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

/// Part shapes (n1, n2) with n1 <= n2 within the given bounds, for corpus
/// sweeps. Mirrored shapes are skipped since they repeat the same labeled
/// graphs up to part swap.
pub fn sweep_shapes(max1: usize, max2: usize) -> Vec<(usize, usize)> {
    let (a, b) = (max1.min(max2), max1.max(max2));
    let mut shapes = Vec::new();
    for n1 in 1..=a {
        for n2 in n1..=b {
            shapes.push((n1, n2));
        }
    }
    shapes
}
