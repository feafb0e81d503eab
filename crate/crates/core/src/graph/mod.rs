//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitmask per vertex.

mod adjlist;
mod enumerate;
mod graph6;
pub(crate) mod structure;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub use adjlist::{encode_adjacency_list, parse_adjacency_list};
pub use enumerate::{
    canonical_code, canonical_form, enumerate_connected_graphs, enumerate_trees, LABELED_MAX_N,
    DEDUP_MAX_N,
};
pub use graph6::{encode_graph6, parse_graph6};
pub use structure::{
    blocks, bridges, component_count, components, is_connected, simplicial_vertices,
    vertex_connectivity, BlockDecomposition, Components, Connectivity,
};

/// Hard limit imposed by the 64-bit vertex sets.
pub const MAX_VERTICES: usize = 64;
/// Cap applied to parsed input unless overridden.
pub const DEFAULT_CAP: usize = 32;

/// A set of vertex indices below 64.
///
/// Ordered lexicographically by the ascending list of members, so `{0,3}`
/// sorts before `{1}` and `{0}` before `{0,1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Edge {
        Edge::try_new(a, b).expect("an edge needs two distinct endpoints")
    }

    pub fn try_new(a: usize, b: usize) -> Option<Edge> {
        match a.cmp(&b) {
            Ordering::Less => Some(Edge { u: a, v: b }),
            Ordering::Greater => Some(Edge { u: b, v: a }),
            Ordering::Equal => None,
        }
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices. Panics if `n > MAX_VERTICES`.
    pub fn empty(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices are supported");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidArgument(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!("edge {a}-{b} out of range for n={n}")));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!("self-loop at {a}")));
            }
            g.link(a, b);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks. The masks must be
    /// symmetric and loop free.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!((0..adj.len()).all(|v| adj[v] >> v & 1 == 0));
        debug_assert!((0..adj.len())
            .all(|u| VertexSet(adj[u]).iter().all(|v| v < adj.len() && adj[v] >> u & 1 == 1)));
        Graph { n: adj.len(), adj }
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1u64 << b;
        self.adj[b] |= 1u64 << a;
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1u64 << b);
        self.adj[b] &= !(1u64 << a);
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a] >> b & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Open neighborhood of a set: vertices outside `set` adjacent to some member.
    pub fn set_neighbors(&self, set: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for v in set.iter() {
            out |= self.adj[v];
        }
        VertexSet(out & !set.0)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Edges in lexicographic order of `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| Edge { u, v })
        })
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.neighbors(v).intersects(set))
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.unlink(e.u, e.v);
        g
    }

    pub fn with_edge(&self, e: Edge) -> Graph {
        let mut g = self.clone();
        g.link(e.u, e.v);
        g
    }

    /// Adds every missing edge inside `set`.
    pub fn with_clique(&self, set: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in set.iter() {
            g.adj[v] |= set.without(v).0;
        }
        g
    }

    /// The subgraph induced by `keep`, relabeled `0..keep.len()` in ascending
    /// order, together with the old label of each new vertex.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut adj = vec![0u64; old.len()];
        for (i, &a) in old.iter().enumerate() {
            for (j, &b) in old.iter().enumerate() {
                if self.has_edge(a, b) {
                    adj[i] |= 1u64 << j;
                }
            }
        }
        (Graph::from_adjacency(adj), old)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for e in self.edges() {
            adj[perm[e.u]] |= 1u64 << perm[e.v];
            adj[perm[e.v]] |= 1u64 << perm[e.u];
        }
        Graph::from_adjacency(adj)
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}
