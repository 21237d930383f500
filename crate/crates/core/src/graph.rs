//! Graph representation, bipartition detection, and distance machinery.

use crate::matrix::{IntMat, Mat};
use thiserror::Error;

pub const MAX_VERTICES: usize = 512;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} out of range for n = {1}")]
    VertexOutOfRange(usize, usize),
    #[error("graph has {0} vertices, maximum supported is {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite; odd closed walk: {0:?}")]
    NotBipartite(Vec<usize>),
    #[error("bad token {0:?} in edge list")]
    BadToken(String),
}

/// Simple undirected graph: symmetric 0/1 adjacency with zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
            neighbors: vec![Vec::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an undirected edge; duplicate edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for &w in [u, v].iter() {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange(w, self.n));
            }
        }
        if !self.adj[u * self.n + v] {
            self.adj[u * self.n + v] = true;
            self.adj[v * self.n + u] = true;
            self.neighbors[u].push(v);
            self.neighbors[v].push(u);
            self.neighbors[u].sort_unstable();
            self.neighbors[v].sort_unstable();
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn adjacency(&self) -> Mat {
        Mat::from_fn(self.n, |i, j| if self.adj[i * self.n + j] { 1.0 } else { 0.0 })
    }

    pub fn adjacency_int(&self) -> IntMat {
        let mut m = IntMat::zeros(self.n);
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                m[(u, v)] = 1;
            }
        }
        m
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    fn bfs_distances(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for &v in &self.neighbors[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Relabels vertices: new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0; self.n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (inv[u], inv[v])).collect();
        Graph::from_edges(self.n, &edges).expect("relabeling preserves validity")
    }
}

/// The two independent sets of a connected bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part1: Vec<usize>,
    pub part2: Vec<usize>,
}

impl Bipartition {
    pub fn n1(&self) -> usize {
        self.part1.len()
    }

    pub fn n2(&self) -> usize {
        self.part2.len()
    }

    /// True when `u` lies in part 1.
    pub fn in_part1(&self, u: usize) -> bool {
        self.part1.binary_search(&u).is_ok()
    }

    pub fn same_part(&self, u: usize, v: usize) -> bool {
        self.in_part1(u) == self.in_part1(v)
    }

    /// Permutation listing part 1 then part 2 (new index -> old vertex).
    pub fn contiguous_order(&self) -> Vec<usize> {
        let mut p = self.part1.clone();
        p.extend_from_slice(&self.part2);
        p
    }
}

/// 2-colors a connected graph by BFS layering; part 1 contains vertex 0.
///
/// A non-bipartite input yields `NotBipartite` carrying an odd closed walk.
pub fn bipartition(g: &Graph) -> Result<Bipartition, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    color[0] = 0;
    queue.push_back(0);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                parent[v] = u;
                queue.push_back(v);
            } else if color[v] == color[u] {
                return Err(GraphError::NotBipartite(odd_walk(&parent, u, v)));
            }
        }
    }
    let part1 = (0..n).filter(|&u| color[u] == 0).collect();
    let part2 = (0..n).filter(|&u| color[u] == 1).collect();
    Ok(Bipartition { part1, part2 })
}

/// Closed odd walk through the conflicting edge (u, v): u -> root path,
/// reversed root -> v path, then edge v-u.
fn odd_walk(parent: &[usize], u: usize, v: usize) -> Vec<usize> {
    let chain = |mut x: usize| {
        let mut path = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let up = chain(u);
    let mut down = chain(v);
    down.reverse();
    let mut walk = up;
    walk.extend(&down[1..]); // both chains end at the BFS root
    walk.push(u);
    walk
}

/// Distance classification of a connected graph: diameter and the 0/1
/// distance-i matrices A_0 = I, A_1 = A, ..., A_D.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrices {
    n: usize,
    diameter: usize,
    dist: Vec<usize>,
}

impl DistanceMatrices {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    /// The 0/1 distance-i matrix; zero matrix for i > D.
    pub fn class_matrix(&self, i: usize) -> Mat {
        Mat::from_fn(self.n, |u, v| if self.dist(u, v) == i { 1.0 } else { 0.0 })
    }

    /// Ordered pairs (u, v) at distance exactly i.
    pub fn pairs_at(&self, i: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.dist(u, v) == i {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of vertices at distance i from u.
    pub fn class_size(&self, u: usize, i: usize) -> usize {
        (0..self.n).filter(|&v| self.dist(u, v) == i).count()
    }
}

/// All-pairs BFS distances; errors on disconnected input.
pub fn distance_matrices(g: &Graph) -> Result<DistanceMatrices, GraphError> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n * n];
    let mut diameter = 0;
    for u in 0..n {
        let du = g.bfs_distances(u);
        for (v, &d) in du.iter().enumerate() {
            if d == usize::MAX {
                return Err(GraphError::Disconnected);
            }
            dist[u * n + v] = d;
            diameter = diameter.max(d);
        }
    }
    Ok(DistanceMatrices { n, diameter, dist })
}

/// Degrees, averages, and per-part averages when a bipartition is given.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeSummary {
    pub degrees: Vec<usize>,
    pub average: f64,
    pub edge_count: usize,
    pub part_averages: Option<(f64, f64)>,
}

impl DegreeSummary {
    pub fn is_regular(&self) -> bool {
        self.degrees.windows(2).all(|w| w[0] == w[1])
    }
}

pub fn degree_summary(g: &Graph, b: Option<&Bipartition>) -> DegreeSummary {
    let degrees: Vec<usize> = (0..g.n()).map(|u| g.degree(u)).collect();
    let m = g.edge_count();
    let average = 2.0 * m as f64 / g.n() as f64;
    let part_averages = b.map(|b| {
        let s1: usize = b.part1.iter().map(|&u| g.degree(u)).sum();
        let s2: usize = b.part2.iter().map(|&u| g.degree(u)).sum();
        (s1 as f64 / b.n1() as f64, s2 as f64 / b.n2() as f64)
    });
    DegreeSummary {
        degrees,
        average,
        edge_count: m,
        part_averages,
    }
}

/// Constant degrees per part; `None` when some part has uneven degrees.
pub fn biregular_degrees(g: &Graph, b: &Bipartition) -> Option<(usize, usize)> {
    let part_degree = |part: &[usize]| {
        let d0 = g.degree(part[0]);
        part.iter().all(|&u| g.degree(u) == d0).then_some(d0)
    };
    Some((part_degree(&b.part1)?, part_degree(&b.part2)?))
}
