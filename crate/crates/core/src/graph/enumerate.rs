//! Exhaustive enumeration of small connected graphs, labeled or up to
//! isomorphism, and the brute-force canonical form used for the latter.

use std::collections::BTreeSet;

use super::structure::count_components;
use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest `n` for the labeled sweep (`2^21` edge masks).
pub const LABELED_MAX_N: usize = 7;
/// Largest `n` for the isomorphism-class sweep.
pub const DEDUP_MAX_N: usize = 8;
/// Canonical codes are packed into a `u64`: `n(n-1)/2 <= 64`.
const CANON_MAX_N: usize = 11;

/// Minimal upper-triangle code over all relabelings that list vertices by
/// non-decreasing degree. The first bit of the code is the pair `(0,1)`,
/// then `(0,2), (1,2), (0,3), ..`, most significant first, so the code of
/// the canonical form read as a graph6 body is lexicographically minimal.
///
/// Two graphs get equal codes iff they are isomorphic. Panics for `n > 11`.
pub fn canonical_code(g: &Graph) -> u64 {
    Canonizer::new(g).run().0
}

/// The relabeling of `g` whose code is [`canonical_code`].
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, order) = Canonizer::new(g).run();
    // order[p] is the old vertex placed at position p
    let mut perm = vec![0; g.order()];
    for (p, &v) in order.iter().enumerate() {
        perm[v] = p;
    }
    g.permuted(&perm)
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    /// Vertices grouped by degree, ascending.
    class_of_position: Vec<usize>,
    classes: Vec<VertexSet>,
    placed: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        assert!(n <= CANON_MAX_N, "canonical form is limited to {CANON_MAX_N} vertices");
        let degrees = g.degrees();
        let mut distinct: Vec<usize> = degrees.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let classes: Vec<VertexSet> = distinct
            .iter()
            .map(|&d| (0..n).filter(|&v| degrees[v] == d).collect())
            .collect();
        let mut class_of_position = Vec::with_capacity(n);
        for (c, s) in classes.iter().enumerate() {
            class_of_position.extend(std::iter::repeat_n(c, s.len()));
        }
        Canonizer {
            g,
            n,
            total_bits: (n * n.saturating_sub(1) / 2) as u32,
            class_of_position,
            classes,
            placed: Vec::with_capacity(n),
            best: None,
        }
    }

    fn run(mut self) -> (u64, Vec<usize>) {
        let free = self.classes.clone();
        self.place(0, 0, false, free);
        self.best.unwrap_or((0, Vec::new()))
    }

    /// `code` holds the first `p(p-1)/2` bits; `below` records that it is
    /// already strictly smaller than the incumbent's prefix.
    fn place(&mut self, p: usize, code: u64, below: bool, mut free: Vec<VertexSet>) {
        if p == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.placed.clone()));
            }
            return;
        }
        let class = self.class_of_position[p];
        let candidates = free[class];
        for v in candidates.iter() {
            let mut next = code;
            for &row in &self.placed {
                next = next << 1 | u64::from(self.g.has_edge(row, v));
            }
            let mut next_below = below;
            if !below {
                if let Some((best, _)) = &self.best {
                    let bits = (p * (p + 1) / 2) as u32;
                    let best_prefix = best >> (self.total_bits - bits);
                    if next > best_prefix {
                        continue;
                    }
                    next_below = next < best_prefix;
                }
            }
            free[class].remove(v);
            self.placed.push(v);
            self.place(p + 1, next, next_below, free.clone());
            self.placed.pop();
            free[class].insert(v);
        }
    }
}

/// Cursor over the graphs produced by [`enumerate_connected_graphs`].
pub enum GraphStream {
    Labeled { n: usize, next_mask: u64, end: u64, pairs: Vec<(usize, usize)> },
    Classes(std::vec::IntoIter<Graph>),
}

impl Iterator for GraphStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match self {
            GraphStream::Labeled { n, next_mask, end, pairs } => {
                while *next_mask < *end {
                    let mask = *next_mask;
                    *next_mask += 1;
                    let mut adj = vec![0u64; *n];
                    for (k, &(a, b)) in pairs.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            adj[a] |= 1 << b;
                            adj[b] |= 1 << a;
                        }
                    }
                    if count_components(&adj, VertexSet::full(*n).bits()) == 1 {
                        return Some(Graph::from_adjacency(adj));
                    }
                }
                None
            }
            GraphStream::Classes(it) => it.next(),
        }
    }
}

/// Every connected graph on exactly `n` vertices, either every labeled graph
/// once (ordered by edge mask, bit `k` the `k`-th pair in graph6 order) or
/// one canonical representative per isomorphism class (ordered by canonical
/// code). `n = 0` yields nothing.
pub fn enumerate_connected_graphs(n: usize, dedup: bool) -> Result<GraphStream> {
    if dedup {
        if n > DEDUP_MAX_N {
            return Err(Error::InvalidArgument(format!(
                "isomorphism-class enumeration is limited to n <= {DEDUP_MAX_N}"
            )));
        }
        Ok(GraphStream::Classes(connected_classes(n).into_iter()))
    } else {
        if n > LABELED_MAX_N {
            return Err(Error::InvalidArgument(format!(
                "labeled enumeration is limited to n <= {LABELED_MAX_N}"
            )));
        }
        let mut pairs = Vec::new();
        for b in 1..n {
            for a in 0..b {
                pairs.push((a, b));
            }
        }
        let end = if n == 0 { 0 } else { 1u64 << pairs.len() };
        Ok(GraphStream::Labeled { n, next_mask: 0, end, pairs })
    }
}

/// Every connected graph keeps a vertex whose removal leaves it connected,
/// so extending the `(n-1)`-vertex classes by one vertex with a nonempty
/// neighborhood reaches every class on `n` vertices.
fn connected_classes(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        for g in &level {
            for nbrs in 1u64..1 << (k - 1) {
                let mut adj = g.adjacency().to_vec();
                adj.push(nbrs);
                for v in VertexSet::from_bits(nbrs).iter() {
                    adj[v] |= 1 << (k - 1);
                }
                seen.insert(canonical_code(&Graph::from_adjacency(adj)));
            }
        }
        level = seen.into_iter().map(|code| decode_code(k, code)).collect();
    }
    level
}

fn decode_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for b in 1..n {
        for a in 0..b {
            if code >> (total - 1 - k) & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
            k += 1;
        }
    }
    Graph::from_adjacency(adj)
}

/// One canonical representative of every tree on `n` vertices, `1 <= n <= 11`.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > CANON_MAX_N {
        return Err(Error::InvalidArgument(format!("trees are enumerated for 1 <= n <= {CANON_MAX_N}")));
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        for t in &level {
            for parent in 0..k - 1 {
                let mut adj = t.adjacency().to_vec();
                adj.push(1 << parent);
                adj[parent] |= 1 << (k - 1);
                seen.insert(canonical_code(&Graph::from_adjacency(adj)));
            }
        }
        level = seen.into_iter().map(|code| decode_code(k, code)).collect();
    }
    Ok(level)
}
