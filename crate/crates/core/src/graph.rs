//! Simple undirected graphs with canonical `0..n-1` vertex indexing,
//! BFS distance matrices and distance-power graphs.

use std::collections::{BTreeSet, VecDeque};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// A simple undirected graph. Vertices are `0..n-1`; edges are stored as
/// ordered pairs `(u, v)` with `u < v`. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

/// JSON edge-list form: `{"n": int, "edges": [[u, v], ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::new(j.n, j.edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().copied().collect(),
        }
    }
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list. Edges are
    /// normalized to `(min, max)`; duplicates collapse. Self-loops and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &set {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: set,
            neighbors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbors[u].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|u| self.degree(u) == d).then_some(d)
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency(&self) -> DMatrix<f64> {
        let mut a = DMatrix::zeros(self.n, self.n);
        for &(u, v) in &self.edges {
            a[(u, v)] = 1.0;
            a[(v, u)] = 1.0;
        }
        a
    }

    /// Integer adjacency matrix for exact arithmetic paths.
    pub fn adjacency_int(&self) -> Vec<Vec<i64>> {
        let mut a = vec![vec![0i64; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("complement of a valid graph is valid")
    }

    /// Relabels vertices: vertex `u` becomes `perm[u]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
            seen[p] = true;
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        count
    }
}

/// All-pairs shortest-path distances. Disconnected pairs carry `None`,
/// a distinguished infinity that can never collide with a real distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Distance between `u` and `v`; `None` means unreachable.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.entries[u * self.n + v]
    }

    /// Largest finite entry; the diameter when the graph is connected.
    pub fn max_finite(&self) -> u32 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    /// True when `1 <= dist(u, v) <= k`.
    pub fn within(&self, u: usize, v: usize, k: u32) -> bool {
        match self.get(u, v) {
            Some(d) => d >= 1 && d <= k,
            None => false,
        }
    }
}

/// BFS distance matrix of `g`.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut entries = vec![None; n * n];
    for start in 0..n {
        entries[start * n + start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = entries[start * n + u].expect("queued vertices have distances");
            for &v in g.neighbors(u) {
                if entries[start * n + v].is_none() {
                    entries[start * n + v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, entries }
}

/// Distance-power graph: `uv` is an edge iff `1 <= dist_g(u, v) <= k`.
/// `power_graph(g, 1)` equals `g`.
pub fn power_graph(g: &Graph, k: u32) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidGraph("power graph needs k >= 1".into()));
    }
    let dist = distance_matrix(g);
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if dist.within(u, v, k) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(g.n(), edges)
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<u32> {
    let mut best: Option<u32> = None;
    // For every edge, the shortest cycle through it is 1 + dist(u, v) in
    // the graph with that edge removed.
    for (u, v) in g.edges() {
        let mut dist = vec![None; g.n()];
        dist[u] = Some(0u32);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            if let Some(b) = best {
                if dx + 1 >= b {
                    break;
                }
            }
            for &y in g.neighbors(x) {
                if (x == u && y == v) || (x == v && y == u) {
                    continue;
                }
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        if let Some(dv) = dist[v] {
            let cycle = dv + 1;
            best = Some(best.map_or(cycle, |b| b.min(cycle)));
        }
    }
    best
}
