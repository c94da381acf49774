//! Simple undirected graphs on dense vertex indices, BFS distances and the
//! closer/equidistant vertex partition of a vertex pair.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;
use thiserror::Error;

/// Errors raised by graph construction and the distance-based operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex counts differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid order {n} for {what}")]
    InvalidOrder { what: &'static str, n: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bit set per vertex, so edge tests are O(1)
/// and neighbourhood scans touch `n / 64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidOrder { what: "graph", n });
        }
        Ok(Self { adj: vec![FixedBitSet::with_capacity(n); n], edge_count: 0 })
    }

    /// Builds a graph from index pairs. Duplicates and reversed pairs collapse
    /// to a single edge.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edge_list(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::InvalidOrder { what: "cycle", n });
        }
        Self::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    /// Inserts the edge `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(self.insert(u, v))
    }

    /// Removes the edge `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.adj[u][v] {
            return Ok(false);
        }
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
        self.edge_count -= 1;
        Ok(true)
    }

    fn insert(&mut self, u: usize, v: usize) -> bool {
        if self.adj[u][v] {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        true
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::IndexOutOfRange { vertex: v, n: self.n() })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Edge test. Out-of-range indices are simply not adjacent.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut stack = vec![0];
        seen.insert(0);
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.adj[u].ones() {
                if !seen.put(v) {
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count + 1 == self.n() && self.is_connected()
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length");
        let mut seen = FixedBitSet::with_capacity(self.n());
        for &p in perm {
            assert!(p < self.n() && !seen.put(p), "not a permutation");
        }
        let mut out = Graph::empty(self.n()).expect("n >= 1");
        for (u, v) in self.edges() {
            out.insert(perm[u], perm[v]);
        }
        out
    }

    /// One `u64` neighbour mask per vertex, available when `n <= 64`.
    pub fn to_bit_rows(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(self.adj.iter().map(|row| row.ones().fold(0u64, |acc, v| acc | (1u64 << v))).collect())
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.adj[u].ones() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn bfs_connected(&self, source: usize) -> Result<Vec<u32>, GraphError> {
        self.bfs(source).into_iter().collect::<Option<Vec<_>>>().ok_or(GraphError::Disconnected)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// All-pairs hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    /// Partition of all vertices by comparing their distance to `x` and `y`.
    pub fn partition(&self, x: usize, y: usize) -> EdgePartition {
        EdgePartition::from_rows(x, y, self.row(x), self.row(y))
    }
}

/// `W_xy`, `W_yx` and the equidistant set for an ordered pair `(x, y)`.
///
/// Sets are sorted vertex lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    pub x: usize,
    pub y: usize,
    pub closer_to_x: Vec<usize>,
    pub closer_to_y: Vec<usize>,
    pub equidistant: Vec<usize>,
}

impl EdgePartition {
    fn from_rows(x: usize, y: usize, dx: &[u32], dy: &[u32]) -> Self {
        let mut p =
            EdgePartition { x, y, closer_to_x: Vec::new(), closer_to_y: Vec::new(), equidistant: Vec::new() };
        for (u, (a, b)) in dx.iter().zip(dy).enumerate() {
            match a.cmp(b) {
                std::cmp::Ordering::Less => p.closer_to_x.push(u),
                std::cmp::Ordering::Greater => p.closer_to_y.push(u),
                std::cmp::Ordering::Equal => p.equidistant.push(u),
            }
        }
        p
    }

    /// `|W_xy| == |W_yx|`.
    pub fn is_balanced(&self) -> bool {
        self.closer_to_x.len() == self.closer_to_y.len()
    }
}

pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix, GraphError> {
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for s in 0..n {
        d.extend(g.bfs_connected(s)?);
    }
    Ok(DistanceMatrix { n, d })
}

pub fn diameter(g: &Graph) -> Result<u32, GraphError> {
    Ok(all_pairs_distances(g)?.diameter())
}

/// Classifies every vertex by the sign of `d(u,x) - d(u,y)`.
///
/// Adjacency of `x` and `y` is not required.
pub fn edge_partition(g: &Graph, x: usize, y: usize) -> Result<EdgePartition, GraphError> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let dx = g.bfs_connected(x)?;
    let dy = g.bfs_connected(y)?;
    Ok(EdgePartition::from_rows(x, y, &dx, &dy))
}

/// `Some(r)` iff every vertex has degree `r`.
pub fn regular_degree(g: &Graph) -> Option<usize> {
    let r = g.degree(0);
    (1..g.n()).all(|v| g.degree(v) == r).then_some(r)
}

/// Whether every edge of `sub` is an edge of `sup` under identical labels.
pub fn is_spanning_subgraph(sub: &Graph, sup: &Graph) -> Result<bool, GraphError> {
    if sub.n() != sup.n() {
        return Err(GraphError::SizeMismatch { left: sub.n(), right: sup.n() });
    }
    Ok((0..sub.n()).all(|v| sub.adj[v].is_subset(&sup.adj[v])))
}

/// Non-adjacent unordered pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn complement_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out = Vec::with_capacity(n * (n - 1) / 2 - g.edge_count());
    for u in 0..n {
        for v in u + 1..n {
            if !g.adj[u][v] {
                out.push((u, v));
            }
        }
    }
    out
}
